#include <CLI11.hpp>

#include "kdense/commands.hpp"
#include "kdense/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"k-dense decomposition toolkit"};
    app.set_version_flag("--version", kdense::kToolkitVersion);
    app.set_config("--config", "", "Config file; flags override its values");
    app.require_subcommand(1);

    kdense::RunConfig cfg;
    std::string format = "csv";
    std::int64_t cutoff = -1;
    bool have_cutoff = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.inputs, "Snapshot edge-list path")
            ->required();
        sub->add_option_function<std::int64_t>(
               "--cutoff",
               [&](std::int64_t v) {
                   cutoff = v;
                   have_cutoff = true;
               },
               "Drop edges with last_seen older than this epoch");
        sub->add_option("--bin-width", cfg.bin_width,
                        "Profile bin width in (0,1]")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Random seed")
            ->capture_default_str();
        sub->add_option("--out", cfg.out_dir, "Output directory")->required();
        sub->add_option("--format", format, "Report format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    auto* decompose = app.add_subcommand(
        "decompose", "Decompose one snapshot and emit profiles");
    add_common(decompose);

    auto* compare = app.add_subcommand(
        "compare", "Compare decompositions across snapshots");
    add_common(compare);

    auto* null_cmd = app.add_subcommand(
        "null", "dK-randomize a snapshot and decompose the ensemble");
    add_common(null_cmd);
    null_cmd->add_option("--d", cfg.d, "dK order: 0, 1, or 2")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    null_cmd->add_option("--instances", cfg.instances,
                         "Ensemble size (default 10)");
    null_cmd->add_option("--swap-factor", cfg.swap_factor,
                         "Accepted swaps per edge")
        ->capture_default_str();

    auto* core = app.add_subcommand(
        "core", "Extract H_kmax and run its 0K/1K analysis");
    add_common(core);
    core->add_option("--instances", cfg.instances,
                     "Ensemble size (default 20)");
    core->add_option("--swap-factor", cfg.swap_factor,
                     "Accepted swaps per edge")
        ->capture_default_str();

    auto* cone = app.add_subcommand(
        "cone", "Customer-cone distributions and rank overlaps");
    add_common(cone);
    cone->add_option("--relationships", cfg.relationships,
                     "AS relationship file (A|B|r)")
        ->required();
    cone->add_option("--weights", cfg.weights, "Per-AS weight CSV");
    cone->add_option("--ranks", cfg.ranks, "Rank file CSV (repeatable)");

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? kdense::ReportFormat::json
                                  : kdense::ReportFormat::csv;
    if (have_cutoff) cfg.cutoff = cutoff;

    return kdense::run_command(cfg);
}
