#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kdense/commands.hpp"

using namespace kdense;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("kdense_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_file(const fs::path& dir, const std::string& name,
                    const std::string& content) {
    auto p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

nlohmann::json read_json(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kTrianglePendant = "0 1\n1 2\n0 2\n2 3\n";

std::string k_edges(int n) {
    std::ostringstream ss;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ss << u << ' ' << v << '\n';
    return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("decompose emits meta, indices, profiles, and summaries") {
    TempDir tmp("decompose");
    auto input = write_file(tmp.path, "tp.edges", kTrianglePendant);

    RunConfig cfg;
    cfg.command = "decompose";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    REQUIRE(run_command(cfg) == 0);

    auto meta = read_json(tmp.path / "out" / "meta.json");
    CHECK(meta["nodes"] == 4);
    CHECK(meta["links"] == 4);
    CHECK(meta["k_max"] == 3);
    CHECK(meta["snapshot_id"] == "tp");
    CHECK(meta["kdense_version"] == kToolkitVersion);
    CHECK(meta.contains("config_hash"));

    for (const char* name :
         {"node_indices.csv", "edge_indices.csv", "profile_node_fraction.csv",
          "profile_link_fraction.csv", "profile_attachment.csv",
          "profile_set_to_set_k2.csv", "profile_set_to_set_k3.csv",
          "set_summaries.csv", "node_metrics.csv", "set_degree_stats.csv",
          "degree_vs_index_logbin.csv"})
        CHECK(fs::exists(tmp.path / "out" / name));
    CHECK_FALSE(fs::exists(tmp.path / "out" / "INCOMPLETE"));
}

TEST_CASE("decompose of K5 reports k_max 5") {
    TempDir tmp("k5");
    auto input = write_file(tmp.path, "k5.edges", k_edges(5));
    RunConfig cfg;
    cfg.command = "decompose";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    REQUIRE(run_command(cfg) == 0);
    auto meta = read_json(tmp.path / "out" / "meta.json");
    CHECK(meta["nodes"] == 5);
    CHECK(meta["links"] == 10);
    CHECK(meta["k_max"] == 5);
}

TEST_CASE("decompose honors json format for profiles") {
    TempDir tmp("jsonfmt");
    auto input = write_file(tmp.path, "tp.edges", kTrianglePendant);
    RunConfig cfg;
    cfg.command = "decompose";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    cfg.format = ReportFormat::json;
    REQUIRE(run_command(cfg) == 0);
    CHECK(fs::exists(tmp.path / "out" / "profile_node_fraction.json"));
    auto doc = read_json(tmp.path / "out" / "profile_node_fraction.json");
    CHECK(doc["rows"].size() == 2);
    // Decomposition index files stay CSV per their fixed schema.
    CHECK(fs::exists(tmp.path / "out" / "node_indices.csv"));
}

TEST_CASE("compare over a growing family reports kmax ratios") {
    TempDir tmp("compare");
    std::vector<std::string> inputs;
    for (int n : {4, 5, 6})
        inputs.push_back(
            write_file(tmp.path, "k" + std::to_string(n) + ".edges",
                       k_edges(n))
                .string());
    RunConfig cfg;
    cfg.command = "compare";
    cfg.inputs = inputs;
    cfg.out_dir = (tmp.path / "out").string();
    REQUIRE(run_command(cfg) == 0);

    auto growth = read_file(tmp.path / "out" / "growth.csv");
    std::istringstream lines(growth);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    REQUIRE(rows.size() == 4);  // header + 3 snapshots
    CHECK(rows[1].find("k4,4,6,4,3") == 0);
    CHECK(rows[2].find(",1.25,") != std::string::npos);  // kmax ratio 5/4
    CHECK(rows[3].find(",1.5,") != std::string::npos);   // kmax ratio 6/4

    CHECK(fs::exists(tmp.path / "out" / "aggregated_node_fraction.csv"));
    CHECK(fs::exists(tmp.path / "out" / "aggregated_link_fraction.csv"));
    CHECK(fs::exists(tmp.path / "out" / "aggregated_set_to_set_kmax.csv"));
    CHECK(fs::exists(tmp.path / "out" / "snapshots" / "k4" /
                     "profile_node_fraction.csv"));
}

TEST_CASE("compare accepts the same snapshot twice") {
    TempDir tmp("dup");
    auto input = write_file(tmp.path, "tp.edges", kTrianglePendant);
    RunConfig cfg;
    cfg.command = "compare";
    cfg.inputs = {input.string(), input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    REQUIRE(run_command(cfg) == 0);
    CHECK(fs::exists(tmp.path / "out" / "snapshots" / "tp" /
                     "profile_node_fraction.csv"));
    CHECK(fs::exists(tmp.path / "out" / "snapshots" / "tp_2" /
                     "profile_node_fraction.csv"));
    // Two identical snapshots: aggregated bands collapse to the mean.
    auto agg = read_file(tmp.path / "out" / "aggregated_link_fraction.csv");
    std::istringstream lines(agg);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.find("bin_lo") == 0)
            continue;
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 8);
        if (cells[7] == "0") continue;
        CHECK(cells[7] == "2");
        CHECK(cells[3] == cells[4]);  // p10 == p90
        CHECK(cells[5] == cells[6]);  // min == max
    }
}

TEST_CASE("null analysis on a tiny template") {
    TempDir tmp("null");
    auto input = write_file(tmp.path, "k5.edges", k_edges(5));
    RunConfig cfg;
    cfg.command = "null";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    cfg.d = 1;
    cfg.instances = 4;
    cfg.seed = 7;
    REQUIRE(run_command(cfg) == 0);

    auto stats = read_json(tmp.path / "out" / "kmax_stats.json");
    CHECK(stats["template_k_max"] == 5);
    // K5's degree sequence is uniquely realized, so every 1K instance is K5.
    CHECK(stats["mean"] == 5.0);
    CHECK(stats["sigma"] == 0.0);
    REQUIRE(stats["values"].size() == 4);

    auto manifest = read_json(tmp.path / "out" / "manifest.json");
    CHECK(manifest["complete"] == true);
    REQUIRE(manifest["instances"].size() == 4);
    CHECK(manifest["instances"][0]["seed"] == 7);
    CHECK(manifest["instances"][3]["seed"] == 10);
    for (const auto& inst : manifest["instances"])
        CHECK(fs::exists(tmp.path / "out" /
                         inst["path"].get<std::string>()));
    CHECK(fs::exists(tmp.path / "out" / "ensemble_link_fraction.csv"));
    CHECK(fs::exists(tmp.path / "out" / "template_link_fraction.csv"));
}

TEST_CASE("core analysis of K6 with a tail") {
    TempDir tmp("core");
    std::string edges = k_edges(6);
    edges += "0 6\n6 7\n";
    auto input = write_file(tmp.path, "k6tail.edges", edges);
    RunConfig cfg;
    cfg.command = "core";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    cfg.instances = 4;
    cfg.seed = 3;
    REQUIRE(run_command(cfg) == 0);

    auto core = read_json(tmp.path / "out" / "core.json");
    CHECK(core["k_max"] == 6);
    CHECK(core["nodes"] == 6);
    CHECK(core["links"] == 15);
    CHECK(core["density"] == 1.0);

    for (const char* name :
         {"core.edges", "core_degree_series.csv", "core_path_distribution.csv",
          "ensemble_0k_degree_series.csv", "ensemble_1k_degree_series.csv",
          "ensemble_0k_path_distribution.csv",
          "ensemble_1k_path_distribution.csv", "motifs_z_0k.csv",
          "motifs_z_1k.csv"})
        CHECK(fs::exists(tmp.path / "out" / name));
}

TEST_CASE("core analysis rejects triangle-free snapshots") {
    TempDir tmp("flatcore");
    auto input = write_file(tmp.path, "path.edges", "0 1\n1 2\n2 3\n");
    RunConfig cfg;
    cfg.command = "core";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    CHECK(run_command(cfg) != 0);
    CHECK(fs::exists(tmp.path / "out" / "INCOMPLETE"));
}

TEST_CASE("cone analysis") {
    TempDir tmp("cone");
    auto input = write_file(tmp.path, "tri.edges", "1 2\n2 3\n1 3\n");
    auto rel = write_file(tmp.path, "rel.txt", "1|2|-1\n2|3|-1\n");
    RunConfig cfg;
    cfg.command = "cone";
    cfg.inputs = {input.string()};
    cfg.relationships = rel.string();
    cfg.out_dir = (tmp.path / "out").string();

    SUBCASE("histogram and overlaps") {
        auto ranks = write_file(tmp.path, "degree.csv", "1,1,3\n2,2,2\n3,3,1\n");
        cfg.ranks = {ranks.string()};
        REQUIRE(run_command(cfg) == 0);

        auto hist = read_file(tmp.path / "out" / "cone_distribution_all.csv");
        CHECK(hist.find("1,1\n") != std::string::npos);
        CHECK(hist.find("2,1\n") != std::string::npos);
        CHECK(hist.find("3,1\n") != std::string::npos);

        // The whole triangle is the kmax set; top-3 of the rank file covers
        // it, as does the degree ranking computed from the snapshot.
        auto overlaps = read_file(tmp.path / "out" / "rank_overlaps.csv");
        CHECK(overlaps.find("degree,3,3,3") != std::string::npos);
        CHECK(overlaps.find("degree_computed,3,3,3") != std::string::npos);

        auto meta = read_json(tmp.path / "out" / "cone_meta.json");
        CHECK(meta["k_max"] == 3);
        CHECK(meta["dense_set_size"] == 3);
        CHECK(meta["weight_kind"] == "as_count");
    }

    SUBCASE("missing relationship file is a config error") {
        cfg.relationships = (tmp.path / "nope.txt").string();
        CHECK(run_command(cfg) != 0);
    }
}

TEST_CASE("determinism: rerunning an identical config reproduces all bytes") {
    TempDir tmp("determinism");
    auto input = write_file(tmp.path, "g.edges", k_edges(6));

    RunConfig cfg;
    cfg.command = "null";
    cfg.inputs = {input.string()};
    cfg.d = 2;
    cfg.instances = 3;
    cfg.seed = 99;
    cfg.out_dir = (tmp.path / "out").string();

    auto snapshot_tree = [&]() {
        std::map<std::string, std::string> files;
        for (const auto& entry :
             fs::recursive_directory_iterator(cfg.out_dir))
            if (entry.is_regular_file())
                files[entry.path().string()] = read_file(entry.path());
        return files;
    };

    REQUIRE(run_command(cfg) == 0);
    auto first = snapshot_tree();
    REQUIRE(run_command(cfg) == 0);
    auto second = snapshot_tree();
    CHECK(first == second);
    CHECK(first.size() > 3);
}

TEST_CASE("errors surface as nonzero exit with INCOMPLETE marker") {
    TempDir tmp("err");
    auto input = write_file(tmp.path, "bad.edges", "a a 1\n");
    RunConfig cfg;
    cfg.command = "decompose";
    cfg.inputs = {input.string()};
    cfg.out_dir = (tmp.path / "out").string();
    CHECK(run_command(cfg) != 0);
    CHECK(fs::exists(tmp.path / "out" / "INCOMPLETE"));

    // A later successful run clears the marker.
    auto good = write_file(tmp.path, "good.edges", kTrianglePendant);
    cfg.inputs = {good.string()};
    CHECK(run_command(cfg) == 0);
    CHECK_FALSE(fs::exists(tmp.path / "out" / "INCOMPLETE"));

    RunConfig unknown;
    unknown.command = "bogus";
    unknown.out_dir = (tmp.path / "u").string();
    CHECK(run_command(unknown) != 0);
}

TEST_SUITE_END();
