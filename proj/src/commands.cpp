#include "kdense/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "kdense/asdata.hpp"
#include "kdense/decomposition.hpp"
#include "kdense/graph.hpp"
#include "kdense/metrics.hpp"
#include "kdense/null_models.hpp"
#include "kdense/profiles.hpp"

namespace kdense {

namespace fs = std::filesystem;

namespace {

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["command"] = cfg.command;
    j["inputs"] = cfg.inputs;
    j["cutoff"] = cfg.cutoff ? nlohmann::json(*cfg.cutoff) : nlohmann::json();
    j["bin_width"] = cfg.bin_width;
    j["d"] = cfg.d;
    j["instances"] = cfg.instances;
    j["seed"] = cfg.seed;
    j["swap_factor"] = cfg.swap_factor;
    j["out_dir"] = cfg.out_dir;
    j["format"] = cfg.format == ReportFormat::csv ? "csv" : "json";
    j["relationships"] = cfg.relationships;
    j["weights"] = cfg.weights;
    j["ranks"] = cfg.ranks;
    return j;
}

struct Ctx {
    RunConfig cfg;
    ReportHeader header;
    fs::path out;

    explicit Ctx(const RunConfig& c) : cfg(c) {
        header.config_hash = config_hash(cfg);
        header.seed = cfg.seed;
        out = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
        fs::create_directories(out);
    }

    void table(const std::string& stem, const Table& t) const {
        write_table(out, stem, t, header, cfg.format);
    }
    void csv_table(const std::string& stem, const Table& t) const {
        write_table(out, stem, t, header, ReportFormat::csv);
    }
    void json_doc(const std::string& name, nlohmann::json j) const {
        write_json(out, name, std::move(j), header);
    }
};

void require_inputs(const RunConfig& cfg, std::size_t n, const char* what) {
    if (cfg.inputs.size() != n)
        throw DomainError(std::string(what) + ": expected " +
                          std::to_string(n) + " input path(s), got " +
                          std::to_string(cfg.inputs.size()));
    for (const auto& p : cfg.inputs)
        if (!fs::exists(p)) throw DomainError("input not found: " + p);
}

Snapshot load_snapshot(const std::string& path,
                       std::optional<std::int64_t> cutoff,
                       std::string id = "") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    if (id.empty()) id = fs::path(path).stem().string();
    return load_edge_list(in, cutoff, std::move(id));
}

Table profile_table(const Profile& p) {
    Table t;
    t.columns = {"kind", "k", "x", "y"};
    std::string kind = profile_kind_name(p.kind);
    if (p.kind == ProfileKind::set_to_set)
        kind += "_k" + std::to_string(p.k0);
    for (const auto& pt : p.points) t.add_row({kind, pt.k, pt.x, pt.y});
    return t;
}

Table aggregated_table(const AggregatedProfile& a) {
    Table t;
    t.columns = {"bin_lo", "bin_hi", "mean", "p10", "p90", "min", "max", "n"};
    for (const auto& b : a.bins) {
        if (b.sample_count == 0) {
            t.add_row({b.lo, b.hi, "", "", "", "", "", 0});
        } else {
            t.add_row({b.lo, b.hi, b.mean, b.p10, b.p90, b.min, b.max,
                       b.sample_count});
        }
    }
    return t;
}

nlohmann::json meta_json(const SnapshotMeta& meta, int k_max, int k_min) {
    nlohmann::json j;
    j["snapshot_id"] = meta.snapshot_id;
    j["nodes"] = meta.node_count;
    j["links"] = meta.link_count;
    j["k_max"] = k_max;
    j["k_min"] = k_min;
    j["cutoff"] =
        meta.cutoff ? nlohmann::json(*meta.cutoff) : nlohmann::json();
    j["diagnostics"] = {
        {"self_loops_dropped", meta.diagnostics.self_loops_dropped},
        {"duplicates_collapsed", meta.diagnostics.duplicates_collapsed},
        {"filtered_by_cutoff", meta.diagnostics.filtered_by_cutoff}};
    return j;
}

// k0 values for the set-to-set family: 2, 3, and k_max, deduplicated and
// restricted to non-empty sets.
std::vector<int> set_to_set_k0s(const DenseDecomposition& d) {
    std::set<int> candidates{2, 3, d.k_max};
    std::vector<int> out;
    for (int k0 : candidates) {
        if (k0 < d.k_min || k0 > d.k_max) continue;
        if (!k_dense_set(d, k0).empty()) out.push_back(k0);
    }
    return out;
}

struct DegreeSeriesRow {
    std::size_t degree;
    std::size_t n_nodes;
    double knn;
    double clustering;
    double betweenness;
};

// Nodes grouped by exact degree; means of the three node metrics per group.
std::vector<DegreeSeriesRow> degree_series(const Graph& g) {
    auto clu = clustering_all(g);
    auto bet = betweenness(g);
    std::map<std::size_t, std::vector<NodeId>> by_degree;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) by_degree[g.degree(v)].push_back(v);
    std::vector<DegreeSeriesRow> rows;
    for (const auto& [deg, nodes] : by_degree) {
        DegreeSeriesRow r{deg, nodes.size(), 0, 0, 0};
        for (NodeId v : nodes) {
            r.knn += average_neighbor_degree(g, v);
            r.clustering += clu[v];
            r.betweenness += bet[v];
        }
        const double n = static_cast<double>(nodes.size());
        r.knn /= n;
        r.clustering /= n;
        r.betweenness /= n;
        rows.push_back(r);
    }
    return rows;
}

struct Stats {
    double mean, p10, p90, min, max;
    std::size_t n;
};

Stats summarize(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end());
    double sum = 0;
    for (double v : vals) sum += v;
    return {sum / static_cast<double>(vals.size()),
            percentile_nearest_rank(vals, 10.0),
            percentile_nearest_rank(vals, 90.0),
            vals.front(),
            vals.back(),
            vals.size()};
}

Table zscore_table(const Graph& core, const std::vector<Graph>& ensemble) {
    Table t;
    t.columns = {"size", "class", "x", "mu", "sigma", "z", "divergent"};
    for (int size : {3, 4}) {
        auto target = motif_census(core, size);
        std::vector<MotifCensus> censuses;
        censuses.reserve(ensemble.size());
        for (const auto& g : ensemble)
            censuses.push_back(motif_census(g, size));
        auto zs = motif_zscores(target, censuses);
        for (const auto& [cls, z] : zs) {
            nlohmann::json zcell;
            if (z.divergent)
                zcell = z.z > 0 ? "inf" : "-inf";
            else
                zcell = z.z;
            t.add_row({size, motif_name(cls), z.x, z.mu, z.sigma, zcell,
                       z.divergent});
        }
    }
    return t;
}

}  // namespace

std::string config_hash(const RunConfig& cfg) {
    return fnv1a_hex(config_json(cfg).dump());
}

void cmd_decompose(const RunConfig& cfg) {
    require_inputs(cfg, 1, "decompose");
    Ctx ctx(cfg);
    auto snap = load_snapshot(cfg.inputs[0], cfg.cutoff);
    const Graph& g = snap.graph;
    auto dense = k_dense_decomposition(g);
    auto core = k_core_decomposition(g);

    ctx.json_doc("meta.json", meta_json(snap.meta, dense.k_max, dense.k_min));

    {
        Table t;
        t.columns = {"node_token", "k_dense_index", "coreness"};
        std::vector<NodeId> order(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            return g.token(a) < g.token(b);
        });
        for (NodeId v : order)
            t.add_row({g.token(v), dense.node_index[v], core.coreness[v]});
        ctx.csv_table("node_indices", t);
    }
    {
        Table t;
        t.columns = {"node_token_u", "node_token_v", "k_dense_index"};
        std::vector<std::pair<std::pair<std::string, std::string>, int>> rows;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            std::string a = g.token(u), b = g.token(v);
            if (a > b) std::swap(a, b);
            rows.push_back({{a, b}, dense.edge_index[e]});
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [pair, k] : rows)
            t.add_row({pair.first, pair.second, k});
        ctx.csv_table("edge_indices", t);
    }

    ctx.table("profile_node_fraction",
              profile_table(node_fraction_profile(dense, g.node_count())));
    ctx.table("profile_link_fraction",
              profile_table(link_fraction_profile(dense, g.edge_count())));
    ctx.table("profile_attachment", profile_table(attachment_profile(g, dense)));
    for (int k0 : set_to_set_k0s(dense))
        ctx.table("profile_set_to_set_k" + std::to_string(k0),
                  profile_table(set_to_set_profile(g, dense, k0)));

    {
        auto clu = clustering_all(g);
        auto bet = betweenness(g);
        Table t;
        t.columns = {"k", "nodes", "mean_degree", "mean_clustering",
                     "mean_betweenness"};
        for (int k : set_to_set_k0s(dense)) {
            auto s = set_summary(g, dense, k, clu, bet);
            t.add_row({k, s.node_count, s.mean_degree, s.mean_clustering,
                       s.mean_betweenness});
        }
        ctx.table("set_summaries", t);

        Table nm;
        nm.columns = {"node_token", "degree", "clustering", "betweenness"};
        std::vector<NodeId> order(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            return g.token(a) < g.token(b);
        });
        for (NodeId v : order)
            nm.add_row({g.token(v), g.degree(v), clu[v], bet[v]});
        ctx.table("node_metrics", nm);
    }

    // Degree-versus-index distributions: degree statistics per k-dense-set,
    // and index statistics over log-binned degrees.
    {
        Table t;
        t.columns = {"k", "x",   "nodes", "mean_degree",
                     "p10", "p90", "min",  "max"};
        for (int k = dense.k_min; k <= dense.k_max; ++k) {
            auto members = k_dense_set(dense, k);
            if (members.empty()) continue;
            std::vector<double> degs;
            degs.reserve(members.size());
            for (NodeId v : members)
                degs.push_back(static_cast<double>(g.degree(v)));
            std::sort(degs.begin(), degs.end());
            double sum = 0;
            for (double dg : degs) sum += dg;
            double x = dense.k_max == dense.k_min
                           ? 0.0
                           : normalize_index(k, dense.k_min, dense.k_max);
            t.add_row({k, x, degs.size(),
                       sum / static_cast<double>(degs.size()),
                       percentile_nearest_rank(degs, 10.0),
                       percentile_nearest_rank(degs, 90.0), degs.front(),
                       degs.back()});
        }
        ctx.table("set_degree_stats", t);
    }
    {
        std::map<NodeId, double> index_of;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (g.degree(v) > 0)
                index_of[v] = static_cast<double>(dense.node_index[v]);
        auto series = logbin_by_degree(index_of, g, 10);
        Table t;
        t.columns = {"degree_lo", "degree_hi", "nodes", "mean_index",
                     "p10",       "p90",       "min",   "max"};
        for (const auto& b : series.bins)
            t.add_row({b.degree_lo, b.degree_hi, b.count, b.mean, b.p80_low,
                       b.p80_high, b.min, b.max});
        ctx.table("degree_vs_index_logbin", t);
    }
}

void cmd_compare_snapshots(const RunConfig& cfg) {
    if (cfg.inputs.empty())
        throw DomainError("compare: need at least one snapshot");
    for (const auto& p : cfg.inputs)
        if (!fs::exists(p)) throw DomainError("input not found: " + p);
    Ctx ctx(cfg);

    // Distinct snapshot ids even when the same file is given twice.
    std::map<std::string, int> stem_count;
    std::vector<Snapshot> snaps;
    std::vector<DenseDecomposition> decomps;
    for (const auto& path : cfg.inputs) {
        std::string stem = fs::path(path).stem().string();
        int occ = ++stem_count[stem];
        if (occ > 1) stem += "_" + std::to_string(occ);
        snaps.push_back(load_snapshot(path, cfg.cutoff, stem));
        decomps.push_back(k_dense_decomposition(snaps.back().graph));
    }

    {
        Table t;
        t.columns = {"snapshot_id",   "nodes",       "links",
                     "k_max",         "avg_degree",  "nodes_ratio",
                     "links_ratio",   "kmax_ratio",  "avg_degree_ratio",
                     "log_fit",       "log_fit_ratio"};
        const auto& g0 = snaps.front().graph;
        const double n0 = static_cast<double>(g0.node_count());
        const double m0 = static_cast<double>(g0.edge_count());
        const double kmax0 = decomps.front().k_max;
        const double kbar0 = average_degree(g0);
        const double fit0 = average_degree_fit(g0.node_count());
        for (std::size_t i = 0; i < snaps.size(); ++i) {
            const auto& g = snaps[i].graph;
            const double fit = average_degree_fit(g.node_count());
            t.add_row({snaps[i].meta.snapshot_id, g.node_count(),
                       g.edge_count(), decomps[i].k_max, average_degree(g),
                       static_cast<double>(g.node_count()) / n0,
                       static_cast<double>(g.edge_count()) / m0,
                       decomps[i].k_max / kmax0, average_degree(g) / kbar0,
                       fit, fit / fit0});
        }
        ctx.table("growth", t);
    }

    // Per-snapshot raw profiles plus cross-snapshot aggregation of the
    // binned ones. Each snapshot's own k_max set feeds the kmax aggregation.
    std::map<std::string, std::vector<Profile>> binned;
    for (std::size_t i = 0; i < snaps.size(); ++i) {
        const auto& g = snaps[i].graph;
        const auto& d = decomps[i];
        const std::string& id = snaps[i].meta.snapshot_id;
        auto emit = [&](const std::string& name, const Profile& p) {
            write_table(ctx.out / "snapshots" / id, "profile_" + name,
                        profile_table(p), ctx.header, cfg.format);
            binned[name].push_back(bin_profile(p, cfg.bin_width));
        };
        emit("node_fraction", node_fraction_profile(d, g.node_count()));
        emit("link_fraction", link_fraction_profile(d, g.edge_count()));
        emit("attachment", attachment_profile(g, d));
        for (int k0 : {2, 3})
            if (k0 <= d.k_max && !k_dense_set(d, k0).empty())
                emit("set_to_set_k" + std::to_string(k0),
                     set_to_set_profile(g, d, k0));
        emit("set_to_set_kmax", set_to_set_profile(g, d, d.k_max));
    }
    for (const auto& [name, ps] : binned)
        ctx.table("aggregated_" + name, aggregated_table(aggregate_profiles(ps)));
}

void cmd_null_analysis(const RunConfig& cfg) {
    require_inputs(cfg, 1, "null");
    RunConfig resolved = cfg;
    if (resolved.instances == 0) resolved.instances = 10;
    Ctx ctx(resolved);

    auto snap = load_snapshot(resolved.inputs[0], resolved.cutoff);
    const Graph& tmpl = snap.graph;
    auto tmpl_decomp = k_dense_decomposition(tmpl);

    EnsembleSpec spec;
    spec.d = resolved.d;
    spec.instances = resolved.instances;
    spec.seed = resolved.seed;
    spec.swap_factor = resolved.swap_factor;

    nlohmann::json manifest;
    manifest["spec"] = {{"d", spec.d},
                        {"instances", spec.instances},
                        {"seed", spec.seed},
                        {"swap_factor", spec.swap_factor}};
    manifest["template"] = {{"path", resolved.inputs[0]},
                            {"nodes", tmpl.node_count()},
                            {"links", tmpl.edge_count()},
                            {"k_max", tmpl_decomp.k_max}};
    auto instances_json = nlohmann::json::array();

    const RandomStream root(spec.seed);
    std::vector<int> kmaxes;
    std::vector<Profile> binned_link;
    try {
        for (std::size_t i = 0; i < spec.instances; ++i) {
            EnsembleSpec one = spec;
            one.seed = root.substream(i).seed();
            one.instances = 1;
            Graph inst = generate_ensemble(one, tmpl).front();

            char name[48];
            std::snprintf(name, sizeof name, "instance_%04zu.edges", i);
            fs::path rel = fs::path("instances") / name;
            fs::create_directories(ctx.out / "instances");
            std::ofstream out(ctx.out / rel, std::ios::binary);
            write_canonical_edges(inst, out);

            auto d = k_dense_decomposition(inst);
            kmaxes.push_back(d.k_max);
            binned_link.push_back(bin_profile(
                link_fraction_profile(d, inst.edge_count()),
                resolved.bin_width));
            instances_json.push_back(
                {{"index", i}, {"seed", one.seed}, {"path", rel.string()}});
        }
    } catch (...) {
        manifest["instances"] = instances_json;
        manifest["complete"] = false;
        ctx.json_doc("manifest.json", manifest);
        throw;
    }
    manifest["instances"] = instances_json;
    manifest["complete"] = true;
    ctx.json_doc("manifest.json", manifest);

    double mean = 0;
    for (int k : kmaxes) mean += k;
    mean /= static_cast<double>(kmaxes.size());
    double var = 0;
    for (int k : kmaxes) var += (k - mean) * (k - mean);
    const double sigma = std::sqrt(var / static_cast<double>(kmaxes.size()));
    ctx.json_doc("kmax_stats.json",
                 {{"template_k_max", tmpl_decomp.k_max},
                  {"d", spec.d},
                  {"values", kmaxes},
                  {"mean", mean},
                  {"sigma", sigma}});

    ctx.table("template_link_fraction",
              profile_table(bin_profile(
                  link_fraction_profile(tmpl_decomp, tmpl.edge_count()),
                  resolved.bin_width)));
    ctx.table("ensemble_link_fraction",
              aggregated_table(aggregate_profiles(binned_link)));
}

void cmd_core_analysis(const RunConfig& cfg) {
    require_inputs(cfg, 1, "core");
    RunConfig resolved = cfg;
    if (resolved.instances == 0) resolved.instances = 20;
    Ctx ctx(resolved);

    auto snap = load_snapshot(resolved.inputs[0], resolved.cutoff);
    auto extracted = extract_kmax_core(snap.graph);
    const Graph& core = extracted.core;

    ctx.json_doc("core.json", {{"snapshot_id", snap.meta.snapshot_id},
                               {"k_max", extracted.k_max},
                               {"nodes", core.node_count()},
                               {"links", core.edge_count()},
                               {"density", density(core)}});
    {
        std::ofstream out(ctx.out / "core.edges", std::ios::binary);
        write_canonical_edges(core, out);
    }

    {
        Table t;
        t.columns = {"degree", "nodes", "avg_neighbor_degree", "clustering",
                     "betweenness"};
        for (const auto& r : degree_series(core))
            t.add_row({r.degree, r.n_nodes, r.knn, r.clustering,
                       r.betweenness});
        ctx.table("core_degree_series", t);
    }
    {
        Table t;
        t.columns = {"length", "pairs"};
        for (const auto& [len, pairs] : shortest_path_distribution(core))
            t.add_row({len, pairs});
        ctx.table("core_path_distribution", t);
    }

    for (int d : {0, 1}) {
        EnsembleSpec spec;
        spec.d = d;
        spec.instances = resolved.instances;
        // Disjoint seed substreams for the two ensembles.
        spec.seed = resolved.seed + (d == 0 ? 0 : resolved.instances);
        spec.swap_factor = resolved.swap_factor;
        auto ensemble = generate_ensemble(spec, core);
        const std::string tag = std::to_string(d) + "k";

        // Across-instance statistics of the per-degree metric means.
        std::map<std::string, std::map<std::size_t, std::vector<double>>>
            series;
        for (const auto& g : ensemble) {
            for (const auto& r : degree_series(g)) {
                series["avg_neighbor_degree"][r.degree].push_back(r.knn);
                series["clustering"][r.degree].push_back(r.clustering);
                series["betweenness"][r.degree].push_back(r.betweenness);
            }
        }
        Table t;
        t.columns = {"metric", "degree", "mean", "p10", "p90",
                     "min",    "max",    "n"};
        for (const auto& [metric, by_degree] : series) {
            for (const auto& [deg, vals] : by_degree) {
                auto s = summarize(vals);
                t.add_row({metric, deg, s.mean, s.p10, s.p90, s.min, s.max,
                           s.n});
            }
        }
        ctx.table("ensemble_" + tag + "_degree_series", t);

        // Path-length distribution; absent lengths count as zero pairs.
        std::set<std::size_t> lengths;
        std::vector<std::map<std::size_t, std::uint64_t>> dists;
        for (const auto& g : ensemble) {
            dists.push_back(shortest_path_distribution(g));
            for (const auto& [len, pairs] : dists.back()) lengths.insert(len);
        }
        Table pt;
        pt.columns = {"length", "mean", "p10", "p90", "min", "max", "n"};
        for (std::size_t len : lengths) {
            std::vector<double> vals;
            for (const auto& dist : dists) {
                auto it = dist.find(len);
                vals.push_back(it == dist.end()
                                   ? 0.0
                                   : static_cast<double>(it->second));
            }
            auto s = summarize(vals);
            pt.add_row({len, s.mean, s.p10, s.p90, s.min, s.max, s.n});
        }
        ctx.table("ensemble_" + tag + "_path_distribution", pt);

        ctx.table("motifs_z_" + tag, zscore_table(core, ensemble));
    }
}

void cmd_cone_analysis(const RunConfig& cfg) {
    require_inputs(cfg, 1, "cone");
    if (cfg.relationships.empty())
        throw DomainError("cone: --relationships is required");
    if (!fs::exists(cfg.relationships))
        throw DomainError("relationships file not found: " +
                          cfg.relationships);
    Ctx ctx(cfg);

    auto snap = load_snapshot(cfg.inputs[0], cfg.cutoff);
    auto dense = k_dense_decomposition(snap.graph);

    std::ifstream rin(cfg.relationships, std::ios::binary);
    auto rel = load_relationships(rin);

    std::map<std::string, std::uint64_t> weights;
    const bool weighted = !cfg.weights.empty();
    if (weighted) {
        std::ifstream win(cfg.weights, std::ios::binary);
        if (!win) throw DomainError("cannot open " + cfg.weights);
        weights = load_weights(win);
    }
    const auto* wptr = weighted ? &weights : nullptr;

    std::set<std::string> dense_set;
    for (NodeId v : k_dense_set(dense, dense.k_max))
        dense_set.insert(snap.graph.token(v));
    std::set<std::string> dense_in_rel;
    std::size_t missing = 0;
    for (const auto& tok : dense_set) {
        if (rel.has_as(tok))
            dense_in_rel.insert(tok);
        else
            ++missing;
    }

    auto hist_table = [](const std::map<std::uint64_t, std::size_t>& hist) {
        Table t;
        t.columns = {"cone_weight", "count"};
        for (const auto& [w, c] : hist) t.add_row({w, c});
        return t;
    };
    ctx.table("cone_distribution_all",
              hist_table(cone_distribution(rel, nullptr, wptr)));
    if (!dense_in_rel.empty())
        ctx.table("cone_distribution_kmax",
                  hist_table(cone_distribution(rel, &dense_in_rel, wptr)));

    Table overlaps;
    overlaps.columns = {"metric", "top_n", "overlap", "set_size"};
    {
        // Degree rank comes from the snapshot itself; other rankings are
        // supplied externally.
        std::map<std::string, double> degree_of;
        for (NodeId v = 0; v < snap.graph.node_count(); ++v)
            degree_of[snap.graph.token(v)] =
                static_cast<double>(snap.graph.degree(v));
        std::size_t top_n = std::min(dense_set.size(), degree_of.size());
        auto ranked = top_n_by_metric(degree_of, top_n, "degree_computed");
        overlaps.add_row({ranked.metric_name, top_n,
                          rank_overlap(dense_set, ranked, top_n),
                          dense_set.size()});
    }
    for (const auto& rank_path : cfg.ranks) {
        std::ifstream fin(rank_path, std::ios::binary);
        if (!fin) throw DomainError("cannot open " + rank_path);
        auto ranked =
            load_rank_file(fin, fs::path(rank_path).stem().string());
        std::size_t top_n = dense_set.size();
        overlaps.add_row({ranked.metric_name, top_n,
                          rank_overlap(dense_set, ranked, top_n),
                          dense_set.size()});
    }
    ctx.table("rank_overlaps", overlaps);

    ctx.json_doc("cone_meta.json",
                 {{"snapshot_id", snap.meta.snapshot_id},
                  {"k_max", dense.k_max},
                  {"dense_set_size", dense_set.size()},
                  {"dense_set_in_relationships", dense_in_rel.size()},
                  {"dense_set_missing_from_relationships", missing},
                  {"weight_kind", weighted ? "address" : "as_count"}});
}

int run_command(const RunConfig& cfg) {
    fs::path out = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
    std::error_code ec;
    fs::remove(out / "INCOMPLETE", ec);
    try {
        if (cfg.command == "decompose")
            cmd_decompose(cfg);
        else if (cfg.command == "compare")
            cmd_compare_snapshots(cfg);
        else if (cfg.command == "null")
            cmd_null_analysis(cfg);
        else if (cfg.command == "core")
            cmd_core_analysis(cfg);
        else if (cfg.command == "cone")
            cmd_cone_analysis(cfg);
        else
            throw DomainError("unknown command: " + cfg.command);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "kdense: error: " << e.what() << "\n";
        fs::create_directories(out);
        std::ofstream marker(out / "INCOMPLETE", std::ios::binary);
        marker << e.what() << "\n";
        return 1;
    }
}

}  // namespace kdense
