#include "kdense/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace kdense {

namespace {

// Multiplicity of every edge, by sorted-neighbor merge. The hot kernel.
std::vector<std::uint32_t> all_edge_multiplicities(const Graph& g) {
    std::vector<std::uint32_t> mult(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        std::uint32_t m = 0;
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j])
                ++i;
            else if (nu[i] > nv[j])
                ++j;
            else {
                ++m;
                ++i;
                ++j;
            }
        }
        mult[e] = m;
    }
    return mult;
}

// Shared peel. Deletes edges whose live multiplicity falls below the stage
// threshold, updating the multiplicities of co-triangle edges locally; stops
// after the stage for `stop_k` when given, otherwise peels to exhaustion.
// Returns edge indices (edges alive at the end keep index 0).
struct PeelResult {
    std::vector<int> edge_index;
    std::vector<bool> alive;
    int k_max = 2;
};

PeelResult peel(const Graph& g, int stop_k = -1) {
    const std::size_t m = g.edge_count();
    PeelResult r;
    r.edge_index.assign(m, 0);
    r.alive.assign(m, true);
    auto mult = all_edge_multiplicities(g);

    std::size_t alive_count = m;
    std::vector<bool> queued(m, false);
    std::deque<EdgeId> work;

    int k = 2;
    while (alive_count > 0) {
        if (stop_k >= 2 && k == stop_k) break;
        const std::uint32_t threshold = static_cast<std::uint32_t>(k - 1);

        // Seed with the edges of H_k that cannot enter H_{k+1}.
        for (EdgeId e = 0; e < m; ++e) {
            if (r.alive[e] && mult[e] < threshold) {
                work.push_back(e);
                queued[e] = true;
            }
        }
        while (!work.empty()) {
            EdgeId e = work.front();
            work.pop_front();
            queued[e] = false;
            if (!r.alive[e]) continue;
            r.alive[e] = false;
            r.edge_index[e] = k;
            --alive_count;
            auto [u, v] = g.edge(e);
            // Each destroyed triangle {u,v,w} decrements its two other edges.
            auto nu = g.neighbors(u);
            auto eu = g.incident_edges(u);
            auto nv = g.neighbors(v);
            auto ev = g.incident_edges(v);
            std::size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j])
                    ++i;
                else if (nu[i] > nv[j])
                    ++j;
                else {
                    EdgeId ew1 = eu[i], ew2 = ev[j];
                    if (r.alive[ew1] && r.alive[ew2]) {
                        if (--mult[ew1] < threshold && !queued[ew1]) {
                            work.push_back(ew1);
                            queued[ew1] = true;
                        }
                        if (--mult[ew2] < threshold && !queued[ew2]) {
                            work.push_back(ew2);
                            queued[ew2] = true;
                        }
                    }
                    ++i;
                    ++j;
                }
            }
        }
        if (alive_count == 0) {
            r.k_max = k;
            break;
        }
        ++k;
        r.k_max = k;
    }
    return r;
}

}  // namespace

Graph k_dense_subgraph(const Graph& g, int k) {
    if (k < 2) throw DomainError("k_dense_subgraph: k must be >= 2");
    auto r = peel(g, k);
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (r.alive[e]) keep.push_back(e);
    return induced_subgraph(g, keep);
}

DenseDecomposition k_dense_decomposition(const Graph& g) {
    if (g.edge_count() == 0)
        throw DomainError("k_dense_decomposition: graph has no edges");
    auto r = peel(g);
    DenseDecomposition d;
    d.edge_index = std::move(r.edge_index);
    d.k_min = 2;
    d.k_max = 2;
    for (int ki : d.edge_index) d.k_max = std::max(d.k_max, ki);
    d.node_index.assign(g.node_count(), 2);  // isolated nodes stay at 2
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        d.node_index[u] = std::max(d.node_index[u], d.edge_index[e]);
        d.node_index[v] = std::max(d.node_index[v], d.edge_index[e]);
    }
    return d;
}

std::vector<EdgeId> k_dense_shell(const DenseDecomposition& d, int k) {
    if (k < d.k_min || k > d.k_max)
        throw DomainError("k_dense_shell: k outside [k_min, k_max]");
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < d.edge_index.size(); ++e)
        if (d.edge_index[e] == k) out.push_back(e);
    return out;
}

std::vector<NodeId> k_dense_set(const DenseDecomposition& d, int k) {
    if (k < d.k_min || k > d.k_max)
        throw DomainError("k_dense_set: k outside [k_min, k_max]");
    std::vector<NodeId> out;
    for (NodeId v = 0; v < d.node_index.size(); ++v)
        if (d.node_index[v] == k) out.push_back(v);
    return out;
}

CoreDecomposition k_core_decomposition(const Graph& g) {
    const std::size_t n = g.node_count();
    CoreDecomposition c;
    c.coreness.assign(n, 0);
    if (n == 0) return c;

    // Bucket peel in O(N + M).
    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<NodeId>> bins(max_deg + 1);
    for (NodeId v = 0; v < n; ++v) bins[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::size_t k = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        auto& bin = bins[d];
        for (std::size_t i = 0; i < bin.size(); ++i) {
            NodeId v = bin[i];
            if (removed[v] || deg[v] != d) continue;
            removed[v] = true;
            k = std::max(k, d);
            c.coreness[v] = static_cast<int>(k);
            for (NodeId w : g.neighbors(v)) {
                if (removed[w] || deg[w] <= d) continue;
                --deg[w];
                bins[deg[w]].push_back(w);
            }
        }
    }
    return c;
}

KmaxCore extract_kmax_core(const Graph& g) {
    if (g.edge_count() == 0)
        throw DegenerateCoreError("extract_kmax_core: graph has no edges");
    auto d = k_dense_decomposition(g);
    if (d.k_max <= 2)
        throw DegenerateCoreError(
            "extract_kmax_core: triangle-free graph, k_max = 2");
    KmaxCore out;
    out.k_max = d.k_max;
    out.core = induced_subgraph(g, k_dense_shell(d, d.k_max));
    return out;
}

void write_node_indices_csv(const Graph& g, const DenseDecomposition& d,
                            const CoreDecomposition& c, std::ostream& out) {
    out << "node_token,k_dense_index,coreness\n";
    std::vector<NodeId> order(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return g.token(a) < g.token(b);
    });
    for (NodeId v : order)
        out << g.token(v) << ',' << d.node_index[v] << ',' << c.coreness[v]
            << '\n';
}

void write_edge_indices_csv(const Graph& g, const DenseDecomposition& d,
                            std::ostream& out) {
    out << "node_token_u,node_token_v,k_dense_index\n";
    std::vector<std::pair<std::pair<std::string, std::string>, int>> rows;
    rows.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        std::string a = g.token(u), b = g.token(v);
        if (a > b) std::swap(a, b);
        rows.push_back({{std::move(a), std::move(b)}, d.edge_index[e]});
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [pair, k] : rows)
        out << pair.first << ',' << pair.second << ',' << k << '\n';
}

}  // namespace kdense
