#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kdense/error.hpp"

namespace kdense {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Immutable undirected simple graph. Nodes carry dense internal ids and a
// bijective label map to external tokens (AS numbers or arbitrary strings).
// Adjacency lists are sorted so common-neighbor queries are linear merges.
class Graph {
public:
    Graph() = default;

    // Builds from internal-id edges; tokens[i] labels node i. Input edges may
    // contain duplicates, reversed duplicates, and self-loops; they are
    // canonicalized away.
    static Graph build(std::size_t node_count,
                       std::vector<std::pair<NodeId, NodeId>> edges,
                       std::vector<std::string> tokens);

    // Convenience for generated/test graphs: tokens are decimal node ids.
    static Graph from_edges(std::size_t node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges as (u, v) with u < v, sorted lexicographically; EdgeId indexes
    // this sequence.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    std::pair<NodeId, NodeId> edge(EdgeId e) const { return edges_[e]; }

    std::span<const NodeId> neighbors(NodeId v) const;
    // Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(NodeId v) const;
    std::size_t degree(NodeId v) const;

    bool has_node(NodeId v) const { return v < node_count_; }
    bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }
    std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

    const std::string& token(NodeId v) const { return tokens_[v]; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<NodeId> node_of_token(const std::string& tok) const;

private:
    std::size_t node_count_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::size_t> adj_offsets_;  // size node_count_+1
    std::vector<NodeId> adj_;
    std::vector<EdgeId> adj_edge_ids_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, NodeId> token_to_id_;
};

struct IngestDiagnostics {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
    std::size_t filtered_by_cutoff = 0;
};

struct SnapshotMeta {
    std::string snapshot_id;
    std::size_t node_count = 0;
    std::size_t link_count = 0;
    std::optional<std::int64_t> cutoff;
    IngestDiagnostics diagnostics;
};

struct Snapshot {
    Graph graph;
    SnapshotMeta meta;
};

// Reads lines "nodeA nodeB [last_seen]"; '#' starts a comment. With a cutoff,
// edges whose last_seen is older than the cutoff are dropped; edges without a
// timestamp always pass. Duplicate and reversed-duplicate lines collapse to
// one edge, self-loops are dropped, and nodes appearing only on dropped edges
// are absent. Internal ids are assigned in sorted external-token order.
Snapshot load_edge_list(std::istream& in,
                        std::optional<std::int64_t> cutoff = std::nullopt,
                        std::string snapshot_id = "");

// Canonical writer: one "u v" pair per line with u < v by external token
// order, lines sorted, newline-terminated. Reloading the output reproduces an
// isomorphic labeled graph.
void write_canonical_edges(const Graph& g, std::ostream& out);

// Number of common neighbors of the endpoints of edge (u, v); equals the
// number of triangles containing the edge.
std::size_t edge_multiplicity(const Graph& g, NodeId u, NodeId v);

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v);

// 2M / (N(N-1)); requires N >= 2.
double density(const Graph& g);

// 2M / N; requires N >= 1.
double average_degree(const Graph& g);

// Logarithmic growth fit of the average degree: a*ln(n) - b.
double average_degree_fit(std::size_t n, double a = 1.3, double b = 7.5);

// Subgraph containing exactly `keep` and the nodes incident to it; labels
// preserved, node ids reassigned densely.
Graph induced_subgraph(const Graph& g, const std::vector<EdgeId>& keep);

}  // namespace kdense
