#include "kdense/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace kdense {

const char* motif_name(MotifClass c) {
    switch (c) {
        case MotifClass::path3: return "path3";
        case MotifClass::triangle: return "triangle";
        case MotifClass::path4: return "path4";
        case MotifClass::star4: return "star4";
        case MotifClass::cycle4: return "cycle4";
        case MotifClass::paw: return "paw";
        case MotifClass::diamond: return "diamond";
        case MotifClass::clique4: return "clique4";
    }
    return "?";
}

std::vector<MotifClass> motif_classes(int size) {
    if (size == 3) return {MotifClass::path3, MotifClass::triangle};
    if (size == 4)
        return {MotifClass::path4,  MotifClass::star4,   MotifClass::cycle4,
                MotifClass::paw,    MotifClass::diamond, MotifClass::clique4};
    throw DomainError("motif size must be 3 or 4");
}

namespace {

std::vector<std::uint64_t> edge_triangle_counts(const Graph& g) {
    std::vector<std::uint64_t> tri(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j])
                ++i;
            else if (nu[i] > nv[j])
                ++j;
            else {
                ++tri[e];
                ++i;
                ++j;
            }
        }
    }
    return tri;
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

}  // namespace

double clustering(const Graph& g, NodeId v) {
    if (!g.has_node(v)) throw DomainError("clustering: unknown node");
    const std::size_t d = g.degree(v);
    if (d < 2) return 0.0;
    std::uint64_t wedge_closures = 0;
    auto nv = g.neighbors(v);
    for (NodeId u : nv) {
        auto nu = g.neighbors(u);
        std::size_t i = 0, j = 0;
        while (i < nv.size() && j < nu.size()) {
            if (nv[i] < nu[j])
                ++i;
            else if (nv[i] > nu[j])
                ++j;
            else {
                ++wedge_closures;
                ++i;
                ++j;
            }
        }
    }
    // Each triangle at v closes two of its wedges.
    const double triangles = static_cast<double>(wedge_closures) / 2.0;
    return triangles / static_cast<double>(choose2(d));
}

std::vector<double> clustering_all(const Graph& g) {
    auto tri = edge_triangle_counts(g);
    std::vector<std::uint64_t> tv(g.node_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        tv[u] += tri[e];
        tv[v] += tri[e];
    }
    std::vector<double> out(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::size_t d = g.degree(v);
        if (d < 2) continue;
        out[v] = static_cast<double>(tv[v]) / 2.0 /
                 static_cast<double>(choose2(d));
    }
    return out;
}

double average_neighbor_degree(const Graph& g, NodeId v) {
    if (!g.has_node(v)) throw DomainError("average_neighbor_degree: unknown node");
    auto nbrs = g.neighbors(v);
    if (nbrs.empty())
        throw DomainError("average_neighbor_degree: isolated node");
    std::uint64_t sum = 0;
    for (NodeId u : nbrs) sum += g.degree(u);
    return static_cast<double>(sum) / static_cast<double>(nbrs.size());
}

namespace {

// Per-worker scratch for Brandes BFS passes. Predecessor lists live in a
// flat array indexed by adjacency offsets; only nodes touched by a source
// are reset afterwards.
struct BrandesScratch {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<std::uint32_t> pred_count;
    std::vector<NodeId> preds;
    std::vector<NodeId> queue;
    std::vector<std::size_t> offset;

    explicit BrandesScratch(const Graph& g)
        : dist(g.node_count(), -1),
          sigma(g.node_count(), 0.0),
          delta(g.node_count(), 0.0),
          pred_count(g.node_count(), 0),
          preds(2 * g.edge_count()),
          queue(g.node_count()),
          offset(g.node_count() + 1, 0) {
        for (NodeId v = 0; v < g.node_count(); ++v)
            offset[v + 1] = offset[v] + g.degree(v);
    }

    void accumulate(const Graph& g, NodeId s, std::vector<double>& bc) {
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        sigma[s] = 1.0;
        queue[tail++] = s;
        while (head < tail) {
            NodeId v = queue[head++];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[offset[w] + pred_count[w]++] = v;
                }
            }
        }
        for (std::size_t i = tail; i-- > 1;) {
            NodeId w = queue[i];
            for (std::uint32_t p = 0; p < pred_count[w]; ++p) {
                NodeId v = preds[offset[w] + p];
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            bc[w] += delta[w];
        }
        for (std::size_t i = 0; i < tail; ++i) {
            NodeId v = queue[i];
            dist[v] = -1;
            sigma[v] = 0.0;
            delta[v] = 0.0;
            pred_count[v] = 0;
        }
    }
};

}  // namespace

std::vector<double> betweenness(const Graph& g, unsigned n_threads) {
    const std::size_t n = g.node_count();
    std::vector<double> bc(n, 0.0);
    if (n == 0) return bc;

    constexpr std::size_t kBlock = 64;
    const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
    if (n_threads == 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, n_blocks));

    auto run_block = [&](std::size_t b, BrandesScratch& scratch,
                         std::vector<double>& partial) {
        const NodeId lo = static_cast<NodeId>(b * kBlock);
        const NodeId hi =
            static_cast<NodeId>(std::min(n, (b + 1) * kBlock));
        for (NodeId s = lo; s < hi; ++s) scratch.accumulate(g, s, partial);
    };

    if (n_threads <= 1) {
        BrandesScratch scratch(g);
        std::vector<double> partial(n, 0.0);
        for (std::size_t b = 0; b < n_blocks; ++b) {
            std::fill(partial.begin(), partial.end(), 0.0);
            run_block(b, scratch, partial);
            for (NodeId v = 0; v < n; ++v) bc[v] += partial[v];
        }
    } else {
        // Workers fill a bounded slot window; the reducer consumes strictly
        // in block order, so sums are independent of scheduling.
        const std::size_t window = 4 * n_threads;
        std::vector<std::vector<double>> slots(window);
        std::vector<bool> ready(window, false);
        std::mutex mu;
        std::condition_variable can_produce, can_consume;
        std::atomic<std::size_t> next_block{0};
        std::size_t consumed = 0;

        auto worker = [&]() {
            BrandesScratch scratch(g);
            while (true) {
                const std::size_t b = next_block.fetch_add(1);
                if (b >= n_blocks) break;
                std::vector<double> partial(n, 0.0);
                run_block(b, scratch, partial);
                std::unique_lock lk(mu);
                can_produce.wait(lk, [&] { return b < consumed + window; });
                slots[b % window] = std::move(partial);
                ready[b % window] = true;
                can_consume.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::size_t b = 0; b < n_blocks; ++b) {
            std::vector<double> partial;
            {
                std::unique_lock lk(mu);
                can_consume.wait(lk, [&] { return ready[b % window]; });
                partial = std::move(slots[b % window]);
                ready[b % window] = false;
                ++consumed;
                can_produce.notify_all();
            }
            for (NodeId v = 0; v < n; ++v) bc[v] += partial[v];
        }
        for (auto& t : pool) t.join();
    }
    // Each unordered pair was accumulated from both endpoints.
    for (double& b : bc) b /= 2.0;
    return bc;
}

std::map<std::size_t, std::uint64_t> shortest_path_distribution(const Graph& g) {
    const std::size_t n = g.node_count();
    std::map<std::size_t, std::uint64_t> hist;
    std::vector<std::int32_t> dist(n, -1);
    std::vector<NodeId> queue(n);
    for (NodeId s = 0; s < n; ++s) {
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            NodeId v = queue[head++];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        for (std::size_t i = 1; i < tail; ++i)
            if (queue[i] > s) ++hist[static_cast<std::size_t>(dist[queue[i]])];
        for (std::size_t i = 0; i < tail; ++i) dist[queue[i]] = -1;
    }
    return hist;
}

MotifCensus motif_census(const Graph& g, int size) {
    if (size != 3 && size != 4)
        throw DomainError("motif_census: size must be 3 or 4");
    const std::size_t n = g.node_count();
    auto tri = edge_triangle_counts(g);
    std::uint64_t tri_total = std::accumulate(tri.begin(), tri.end(),
                                              std::uint64_t{0});
    const std::uint64_t triangles = tri_total / 3;

    MotifCensus census;
    census.size = size;
    if (size == 3) {
        std::uint64_t wedges = 0;
        for (NodeId v = 0; v < n; ++v) wedges += choose2(g.degree(v));
        census.counts[MotifClass::triangle] = triangles;
        census.counts[MotifClass::path3] = wedges - 3 * triangles;
        return census;
    }

    // Size 4, from triangle/wedge combinatorics. Non-induced totals first,
    // then peel denser classes off sparser ones.
    std::vector<std::uint64_t> tv(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        tv[u] += tri[e];
        tv[v] += tri[e];
    }
    for (NodeId v = 0; v < n; ++v) tv[v] /= 2;  // triangles per node

    // Cliques: adjacent pairs inside each edge's common neighborhood; every
    // K4 shows up once per its six edges.
    std::uint64_t k4_sixfold = 0;
    {
        std::vector<bool> mark(n, false);
        std::vector<NodeId> cn;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            cn = common_neighbors(g, u, v);
            if (cn.size() < 2) continue;
            for (NodeId w : cn) mark[w] = true;
            std::uint64_t inner = 0;
            for (NodeId w : cn)
                for (NodeId x : g.neighbors(w))
                    if (mark[x]) ++inner;
            for (NodeId w : cn) mark[w] = false;
            k4_sixfold += inner / 2;
        }
    }
    const std::uint64_t k4 = k4_sixfold / 6;

    std::uint64_t diamond_raw = 0;  // pairs of triangles sharing an edge
    for (EdgeId e = 0; e < g.edge_count(); ++e) diamond_raw += choose2(tri[e]);
    const std::uint64_t diamond = diamond_raw - 6 * k4;

    std::uint64_t paw_raw = 0;  // (triangle, pendant edge) incidences
    for (NodeId v = 0; v < n; ++v)
        if (tv[v] > 0)  // any triangle vertex has degree >= 2
            paw_raw += tv[v] * static_cast<std::uint64_t>(g.degree(v) - 2);
    const std::uint64_t paw = paw_raw - 4 * diamond - 12 * k4;

    std::uint64_t star_raw = 0;
    for (NodeId v = 0; v < n; ++v) star_raw += choose3(g.degree(v));
    const std::uint64_t star4 = star_raw - paw - 2 * diamond - 4 * k4;

    // 4-cycles via codegrees: each cycle is seen from its two diagonals.
    std::uint64_t cycle_raw_twice = 0;
    {
        std::vector<std::uint32_t> codeg(n, 0);
        std::vector<NodeId> touched;
        for (NodeId u = 0; u < n; ++u) {
            touched.clear();
            for (NodeId w : g.neighbors(u)) {
                for (NodeId x : g.neighbors(w)) {
                    if (x <= u) continue;
                    if (codeg[x]++ == 0) touched.push_back(x);
                }
            }
            for (NodeId x : touched) {
                cycle_raw_twice += choose2(codeg[x]);
                codeg[x] = 0;
            }
        }
    }
    const std::uint64_t cycle_raw = cycle_raw_twice / 2;
    const std::uint64_t cycle4 = cycle_raw - diamond - 3 * k4;

    std::uint64_t p4_raw = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        p4_raw += static_cast<std::uint64_t>(g.degree(u) - 1) *
                  static_cast<std::uint64_t>(g.degree(v) - 1);
    }
    p4_raw -= 3 * triangles;
    const std::uint64_t path4 =
        p4_raw - 2 * paw - 4 * cycle4 - 6 * diamond - 12 * k4;

    census.counts[MotifClass::path4] = path4;
    census.counts[MotifClass::star4] = star4;
    census.counts[MotifClass::cycle4] = cycle4;
    census.counts[MotifClass::paw] = paw;
    census.counts[MotifClass::diamond] = diamond;
    census.counts[MotifClass::clique4] = k4;
    return census;
}

std::map<MotifClass, ZScore> motif_zscores(
    const MotifCensus& target, const std::vector<MotifCensus>& ensemble) {
    if (ensemble.size() < 2)
        throw DomainError("motif_zscores: ensemble needs >= 2 members");
    for (const auto& c : ensemble)
        if (c.size != target.size)
            throw DomainError("motif_zscores: mismatched motif sizes");

    std::map<MotifClass, ZScore> out;
    for (MotifClass cls : motif_classes(target.size)) {
        auto get = [cls](const MotifCensus& c) -> double {
            auto it = c.counts.find(cls);
            return it == c.counts.end() ? 0.0
                                        : static_cast<double>(it->second);
        };
        ZScore zs;
        zs.x = get(target);
        double sum = 0;
        for (const auto& c : ensemble) sum += get(c);
        zs.mu = sum / static_cast<double>(ensemble.size());
        double var = 0;
        for (const auto& c : ensemble) {
            double dlt = get(c) - zs.mu;
            var += dlt * dlt;
        }
        zs.sigma = std::sqrt(var / static_cast<double>(ensemble.size()));
        if (zs.sigma == 0.0) {
            if (zs.x == zs.mu) {
                zs.z = 0.0;
            } else {
                zs.divergent = true;
                zs.z = zs.x > zs.mu
                           ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
            }
        } else {
            zs.z = (zs.x - zs.mu) / zs.sigma;
        }
        out[cls] = zs;
    }
    return out;
}

double percentile_nearest_rank(const std::vector<double>& sorted, double p) {
    if (sorted.empty())
        throw DomainError("percentile of empty sample");
    if (p <= 0) return sorted.front();
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(p / 100.0 * static_cast<double>(sorted.size())));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

DegreeBinnedSeries logbin_by_degree(const std::map<NodeId, double>& values,
                                    const Graph& g,
                                    std::size_t bins_per_decade) {
    if (bins_per_decade < 1)
        throw DomainError("logbin_by_degree: bins_per_decade must be >= 1");
    if (values.empty())
        throw DomainError("logbin_by_degree: empty value map");

    std::map<long, std::vector<double>> grouped;
    for (const auto& [v, val] : values) {
        if (!g.has_node(v)) throw DomainError("logbin_by_degree: unknown node");
        const std::size_t d = g.degree(v);
        if (d == 0) continue;
        long bin = static_cast<long>(std::floor(
            static_cast<double>(bins_per_decade) *
                std::log10(static_cast<double>(d)) +
            1e-9));
        grouped[bin].push_back(val);
    }

    DegreeBinnedSeries series;
    series.bins_per_decade = bins_per_decade;
    for (auto& [bin, vals] : grouped) {
        std::sort(vals.begin(), vals.end());
        DegreeBin b;
        b.degree_lo = std::pow(10.0, static_cast<double>(bin) /
                                         static_cast<double>(bins_per_decade));
        b.degree_hi = std::pow(10.0, static_cast<double>(bin + 1) /
                                         static_cast<double>(bins_per_decade));
        b.count = vals.size();
        b.mean = std::accumulate(vals.begin(), vals.end(), 0.0) /
                 static_cast<double>(vals.size());
        b.p80_low = percentile_nearest_rank(vals, 10.0);
        b.p80_high = percentile_nearest_rank(vals, 90.0);
        b.min = vals.front();
        b.max = vals.back();
        series.bins.push_back(b);
    }
    return series;
}

}  // namespace kdense
