#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdense/report.hpp"

namespace kdense {

// One serializable source of truth for a pipeline run; the config hash in
// every report is computed over the resolved config.
struct RunConfig {
    std::string command;  // decompose | compare | null | core | cone
    std::vector<std::string> inputs;
    std::optional<std::int64_t> cutoff;
    double bin_width = 0.05;
    int d = 0;
    std::size_t instances = 0;  // 0 = command default (null: 10, core: 20)
    std::uint64_t seed = 0;
    double swap_factor = 10.0;
    std::string out_dir;
    ReportFormat format = ReportFormat::csv;
    std::string relationships;
    std::string weights;
    std::vector<std::string> ranks;
};

std::string config_hash(const RunConfig& cfg);

void cmd_decompose(const RunConfig& cfg);
void cmd_compare_snapshots(const RunConfig& cfg);
void cmd_null_analysis(const RunConfig& cfg);
void cmd_core_analysis(const RunConfig& cfg);
void cmd_cone_analysis(const RunConfig& cfg);

// Dispatches on cfg.command. Returns 0 on success; on error reports to
// stderr, leaves an INCOMPLETE marker in the output directory, and returns
// nonzero.
int run_command(const RunConfig& cfg);

}  // namespace kdense
