#include "kdense/graph.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>

namespace kdense {

Graph Graph::build(std::size_t node_count,
                   std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<std::string> tokens) {
    if (tokens.size() != node_count)
        throw DomainError("token count does not match node count");

    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw DomainError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.node_count_ = node_count;
    g.edges_ = std::move(edges);
    g.tokens_ = std::move(tokens);
    for (NodeId v = 0; v < node_count; ++v) {
        auto [it, fresh] = g.token_to_id_.emplace(g.tokens_[v], v);
        if (!fresh) throw DomainError("duplicate node token: " + g.tokens_[v]);
    }

    std::vector<std::size_t> deg(node_count, 0);
    for (const auto& [u, v] : g.edges_) {
        ++deg[u];
        ++deg[v];
    }
    g.adj_offsets_.assign(node_count + 1, 0);
    for (NodeId v = 0; v < node_count; ++v)
        g.adj_offsets_[v + 1] = g.adj_offsets_[v] + deg[v];
    g.adj_.resize(g.adj_offsets_.back());
    g.adj_edge_ids_.resize(g.adj_offsets_.back());
    std::vector<std::size_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[cursor[u]] = v;
        g.adj_edge_ids_[cursor[u]++] = e;
        g.adj_[cursor[v]] = u;
        g.adj_edge_ids_[cursor[v]++] = e;
    }
    // Edges are sorted by (u, v), so each u-slice is already sorted; v-slices
    // receive us in increasing order for the same reason.
    return g;
}

Graph Graph::from_edges(std::size_t node_count,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    std::vector<std::string> tokens(node_count);
    for (std::size_t v = 0; v < node_count; ++v) tokens[v] = std::to_string(v);
    return build(node_count, std::move(edges), std::move(tokens));
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::span<const EdgeId> Graph::incident_edges(NodeId v) const {
    return {adj_edge_ids_.data() + adj_offsets_[v],
            adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::size_t Graph::degree(NodeId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
    if (u >= node_count_ || v >= node_count_ || u == v) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::optional<NodeId> Graph::node_of_token(const std::string& tok) const {
    auto it = token_to_id_.find(tok);
    if (it == token_to_id_.end()) return std::nullopt;
    return it->second;
}

namespace {

bool parse_epoch(std::string_view s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Snapshot load_edge_list(std::istream& in, std::optional<std::int64_t> cutoff,
                        std::string snapshot_id) {
    IngestDiagnostics diag;
    // token pair (a < b) -> kept
    std::map<std::pair<std::string, std::string>, bool> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        auto toks = split_ws(sv);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError(lineno, "expected 'nodeA nodeB [last_seen]', got " +
                                         std::to_string(toks.size()) + " tokens");
        std::string a(toks[0]), b(toks[1]);
        bool keep = true;
        if (toks.size() == 3) {
            std::int64_t last_seen = 0;
            if (!parse_epoch(toks[2], last_seen))
                throw ParseError(lineno, "non-numeric timestamp '" +
                                             std::string(toks[2]) + "'");
            if (cutoff && last_seen < *cutoff) keep = false;
        }
        if (a == b) {
            ++diag.self_loops_dropped;
            continue;
        }
        if (!keep) {
            ++diag.filtered_by_cutoff;
            continue;
        }
        if (a > b) std::swap(a, b);
        auto [it, fresh] = seen.emplace(std::make_pair(std::move(a), std::move(b)), true);
        if (!fresh) ++diag.duplicates_collapsed;
        (void)it;
    }
    if (seen.empty())
        throw EmptyGraphError("no usable edges after filtering");

    // Internal ids follow sorted token order.
    std::vector<std::string> tokens;
    for (const auto& [pair, kept] : seen) {
        (void)kept;
        tokens.push_back(pair.first);
        tokens.push_back(pair.second);
    }
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    std::unordered_map<std::string, NodeId> id_of;
    for (NodeId v = 0; v < tokens.size(); ++v) id_of.emplace(tokens[v], v);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(seen.size());
    for (const auto& [pair, kept] : seen) {
        (void)kept;
        edges.emplace_back(id_of.at(pair.first), id_of.at(pair.second));
    }

    Snapshot snap;
    const std::size_t n_nodes = tokens.size();
    snap.graph = Graph::build(n_nodes, std::move(edges), std::move(tokens));
    snap.meta.snapshot_id = std::move(snapshot_id);
    snap.meta.node_count = snap.graph.node_count();
    snap.meta.link_count = snap.graph.edge_count();
    snap.meta.cutoff = cutoff;
    snap.meta.diagnostics = diag;
    return snap;
}

void write_canonical_edges(const Graph& g, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        std::string a = g.token(u), b = g.token(v);
        if (a > b) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
    if (!g.has_node(u) || !g.has_node(v))
        throw DomainError("common_neighbors: unknown node");
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::vector<NodeId> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(out));
    return out;
}

std::size_t edge_multiplicity(const Graph& g, NodeId u, NodeId v) {
    if (!g.has_edge(u, v))
        throw DomainError("edge_multiplicity: (" + std::to_string(u) + "," +
                          std::to_string(v) + ") is not an edge");
    return common_neighbors(g, u, v).size();
}

double density(const Graph& g) {
    const auto n = g.node_count();
    if (n < 2) throw DomainError("density: need at least 2 nodes");
    return 2.0 * static_cast<double>(g.edge_count()) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

double average_degree(const Graph& g) {
    const auto n = g.node_count();
    if (n < 1) throw DomainError("average_degree: empty graph");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
}

double average_degree_fit(std::size_t n, double a, double b) {
    return a * std::log(static_cast<double>(n)) - b;
}

Graph induced_subgraph(const Graph& g, const std::vector<EdgeId>& keep) {
    std::vector<bool> node_in(g.node_count(), false);
    for (EdgeId e : keep) {
        if (e >= g.edge_count())
            throw DomainError("induced_subgraph: edge id out of range");
        auto [u, v] = g.edge(e);
        node_in[u] = node_in[v] = true;
    }
    std::vector<NodeId> remap(g.node_count(), 0);
    std::vector<std::string> tokens;
    NodeId next = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!node_in[v]) continue;
        remap[v] = next++;
        tokens.push_back(g.token(v));
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(keep.size());
    for (EdgeId e : keep) {
        auto [u, v] = g.edge(e);
        edges.emplace_back(remap[u], remap[v]);
    }
    return Graph::build(next, std::move(edges), std::move(tokens));
}

}  // namespace kdense
