#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace kdense {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class ReportFormat { csv, json };

// Stamped into every report file so runs can be traced back to their config.
struct ReportHeader {
    std::string config_hash;
    std::uint64_t seed = 0;
};

// Tabular report; cells are JSON scalars so numbers render identically in
// CSV and JSON output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add_row(std::vector<nlohmann::json> cells) {
        rows.push_back(std::move(cells));
    }
};

std::string render_cell(const nlohmann::json& cell);

// Writes `table` to <stem>.csv or <stem>.json under out_dir, per format.
// Returns the path written.
std::filesystem::path write_table(const std::filesystem::path& out_dir,
                                  const std::string& stem, const Table& table,
                                  const ReportHeader& header,
                                  ReportFormat format);

// Writes a JSON document with the header fields merged in.
std::filesystem::path write_json(const std::filesystem::path& out_dir,
                                 const std::string& name,
                                 nlohmann::json payload,
                                 const ReportHeader& header);

// FNV-1a over a canonical string.
std::string fnv1a_hex(const std::string& data);

}  // namespace kdense
