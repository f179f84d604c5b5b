#include "kdense/report.hpp"

#include <fstream>

#include "kdense/error.hpp"

namespace kdense {

std::string render_cell(const nlohmann::json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    return cell.dump();
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

}  // namespace

std::filesystem::path write_table(const std::filesystem::path& out_dir,
                                  const std::string& stem, const Table& table,
                                  const ReportHeader& header,
                                  ReportFormat format) {
    if (format == ReportFormat::csv) {
        auto path = out_dir / (stem + ".csv");
        auto out = open_out(path);
        out << "# kdense_version=" << kToolkitVersion << "\n";
        out << "# config_hash=" << header.config_hash << "\n";
        out << "# seed=" << header.seed << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << render_cell(row[i]);
            out << "\n";
        }
        return path;
    }
    auto path = out_dir / (stem + ".json");
    auto out = open_out(path);
    nlohmann::json doc;
    doc["kdense_version"] = kToolkitVersion;
    doc["config_hash"] = header.config_hash;
    doc["seed"] = header.seed;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
            obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
    return path;
}

std::filesystem::path write_json(const std::filesystem::path& out_dir,
                                 const std::string& name,
                                 nlohmann::json payload,
                                 const ReportHeader& header) {
    auto path = out_dir / name;
    auto out = open_out(path);
    payload["kdense_version"] = kToolkitVersion;
    payload["config_hash"] = header.config_hash;
    payload["seed"] = header.seed;
    out << payload.dump(2) << "\n";
    return path;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace kdense
