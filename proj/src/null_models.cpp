#include "kdense/null_models.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace kdense {

DegreeSequence::DegreeSequence(std::vector<std::size_t> degrees)
    : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::of(const Graph& g) {
    std::vector<std::size_t> d(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
    return DegreeSequence(std::move(d));
}

std::size_t DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
}

std::uint64_t JointDegreeMatrix::total() const {
    std::uint64_t t = 0;
    for (const auto& [pair, c] : entries) t += c;
    return t;
}

bool is_graphical(const DegreeSequence& s) {
    const auto& d = s.degrees();
    const std::size_t n = d.size();
    if (n == 0) return true;
    std::size_t sum = s.sum();
    if (sum % 2 != 0) return false;

    // Erdos-Gallai: sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
    std::vector<std::size_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];
    std::size_t prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        // First index >= k with d[i] < k; entries before it contribute k each.
        auto it = std::lower_bound(d.begin() + static_cast<std::ptrdiff_t>(k),
                                   d.end(), k,
                                   [](std::size_t deg, std::size_t kk) {
                                       return deg >= kk;
                                   });
        std::size_t p = static_cast<std::size_t>(it - d.begin());
        std::size_t rhs = k * (k - 1) + (p - k) * k + suffix[p];
        if (prefix > rhs) return false;
    }
    return true;
}

namespace {

using Edge = std::pair<NodeId, NodeId>;

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct EdgePool {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> present;

    void add(NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        present.insert(edge_key(u, v));
    }
    bool contains(NodeId u, NodeId v) const {
        return present.count(edge_key(u, v)) != 0;
    }
    void replace(std::size_t idx, NodeId u, NodeId v) {
        auto [ou, ov] = edges[idx];
        present.erase(edge_key(ou, ov));
        if (u > v) std::swap(u, v);
        edges[idx] = {u, v};
        present.insert(edge_key(u, v));
    }
    // Simplicity invariant, checked after accepted swaps in debug builds.
    void assert_simple() const {
#ifndef NDEBUG
        assert(present.size() == edges.size());
        for (const auto& [u, v] : edges) assert(u < v);
#endif
    }
};

std::size_t swap_target(double swap_factor, std::size_t m) {
    return static_cast<std::size_t>(
        std::ceil(swap_factor * static_cast<double>(m)));
}

// Degree-preserving double edge swaps: (a,b),(c,d) -> (a,c),(b,d) or
// (a,d),(b,c). Rejections count toward the proposal budget.
void randomize_1k(EdgePool& pool, RandomStream& rng, double swap_factor) {
    const std::size_t m = pool.edges.size();
    if (m < 2) return;
    const std::size_t target = swap_target(swap_factor, m);
    const std::size_t budget = 100 * target;
    std::size_t accepted = 0;
    for (std::size_t proposal = 0; accepted < target && proposal < budget;
         ++proposal) {
        std::size_t i = rng.uniform_index(m);
        std::size_t j = rng.uniform_index(m);
        if (i == j) continue;
        auto [a, b] = pool.edges[i];
        auto [c, d] = pool.edges[j];
        if (rng.coin()) std::swap(c, d);
        // Proposed: (a,c), (b,d).
        if (a == c || b == d || a == b || c == d) continue;
        if (a == d && b == c) continue;  // identity under relabeling
        if (pool.contains(a, c) || pool.contains(b, d)) continue;
        pool.replace(i, a, c);
        pool.replace(j, b, d);
        pool.assert_simple();
        ++accepted;
    }
}

}  // namespace

Graph generate_0k(std::size_t n, std::size_t m, RandomStream rng) {
    const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > max_edges)
        throw DomainError("generate_0k: m exceeds n(n-1)/2");
    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        NodeId u = static_cast<NodeId>(rng.uniform_index(n));
        NodeId v = static_cast<NodeId>(rng.uniform_index(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (present.insert(edge_key(u, v)).second) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_1k(const DegreeSequence& s, RandomStream rng,
                  double swap_factor) {
    if (!is_graphical(s))
        throw DomainError("generate_1k: degree sequence is not graphical");
    const auto& degrees = s.degrees();
    const std::size_t n = degrees.size();

    // Havel-Hakimi: satisfy the highest-residual node by connecting it to the
    // next-highest residual nodes. Ties break toward smaller ids.
    using Entry = std::pair<std::size_t, NodeId>;  // (residual, node)
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (NodeId v = 0; v < n; ++v)
        if (degrees[v] > 0) heap.push({degrees[v], v});

    EdgePool pool;
    std::vector<Entry> targets;
    while (!heap.empty()) {
        auto [r, center] = heap.top();
        heap.pop();
        if (heap.size() < r)
            throw DomainError("generate_1k: sequence not realizable");
        targets.clear();
        for (std::size_t i = 0; i < r; ++i) {
            targets.push_back(heap.top());
            heap.pop();
        }
        for (auto& [tr, tv] : targets) {
            pool.add(center, tv);
            if (--tr > 0) heap.push({tr, tv});
        }
    }

    randomize_1k(pool, rng, swap_factor);
    return Graph::from_edges(n, std::move(pool.edges));
}

JointDegreeMatrix joint_degree_matrix(const Graph& g) {
    JointDegreeMatrix jdm;
    for (const auto& [u, v] : g.edges()) {
        std::size_t du = g.degree(u), dv = g.degree(v);
        if (du > dv) std::swap(du, dv);
        ++jdm.entries[{du, dv}];
    }
    return jdm;
}

Graph generate_2k(const Graph& g, RandomStream rng, double swap_factor) {
    if (g.edge_count() < 2)
        throw DomainError("generate_2k: need at least 2 edges");
    const std::size_t n = g.node_count();
    std::vector<std::size_t> deg(n);
    for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);

    EdgePool pool;
    for (const auto& [u, v] : g.edges()) pool.add(u, v);

    const std::size_t m = pool.edges.size();
    const std::size_t target = swap_target(swap_factor, m);
    const std::size_t budget = 100 * target;
    std::size_t accepted = 0;
    for (std::size_t proposal = 0; accepted < target && proposal < budget;
         ++proposal) {
        std::size_t i = rng.uniform_index(m);
        std::size_t j = rng.uniform_index(m);
        if (i == j) continue;
        auto [x1, y1] = pool.edges[i];
        auto [x2, y2] = pool.edges[j];
        if (rng.coin()) std::swap(x1, y1);
        if (rng.coin()) std::swap(x2, y2);
        // Exchange y1 and y2; the joint degree matrix is unchanged only when
        // the exchanged endpoints have equal degree.
        if (deg[y1] != deg[y2]) continue;
        if (x1 == y2 || x2 == y1) continue;
        if (y1 == y2) continue;  // identity
        if (pool.contains(x1, y2) || pool.contains(x2, y1)) continue;
        pool.replace(i, x1, y2);
        pool.replace(j, x2, y1);
        pool.assert_simple();
        ++accepted;
    }
    return Graph::from_edges(n, std::move(pool.edges));
}

std::vector<Graph> generate_ensemble(const EnsembleSpec& spec,
                                     const Graph& template_graph) {
    if (spec.d < 0 || spec.d > 2)
        throw DomainError("generate_ensemble: d must be 0, 1, or 2");
    if (spec.instances < 1)
        throw DomainError("generate_ensemble: instances must be >= 1");
    if (spec.swap_factor <= 0)
        throw DomainError("generate_ensemble: swap_factor must be positive");

    const RandomStream root(spec.seed);
    std::vector<Graph> out;
    out.reserve(spec.instances);
    for (std::size_t i = 0; i < spec.instances; ++i) {
        RandomStream rng = root.substream(i);
        switch (spec.d) {
            case 0:
                out.push_back(generate_0k(template_graph.node_count(),
                                          template_graph.edge_count(), rng));
                break;
            case 1:
                out.push_back(generate_1k(DegreeSequence::of(template_graph),
                                          rng, spec.swap_factor));
                break;
            default:
                out.push_back(
                    generate_2k(template_graph, rng, spec.swap_factor));
        }
    }
    return out;
}

}  // namespace kdense
