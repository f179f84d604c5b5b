#pragma once

// Brute-force reference implementations for cross-checking the library.
// Everything here recomputes from scratch over set-based representations;
// none of it shares code with the implementations under test.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kdense/asdata.hpp"
#include "kdense/graph.hpp"
#include "kdense/metrics.hpp"

namespace oracle {

using NodePair = std::pair<kdense::NodeId, kdense::NodeId>;

struct DenseResult {
    std::map<NodePair, int> edge_index;
    std::vector<int> node_index;
    int k_max = 2;
};

// Fixpoint per k: recompute every edge's in-subgraph multiplicity, delete all
// below threshold, repeat; index by per-k membership differencing.
DenseResult brute_kdense(const kdense::Graph& g);

// Edge set of H_k via the same naive fixpoint.
std::set<NodePair> brute_k_dense_edges(const kdense::Graph& g, int k);

// Per-k from-scratch peeling; coreness = largest k the node survives.
std::vector<int> brute_coreness(const kdense::Graph& g);

// Pairwise path-counting betweenness (endpoints excluded, unordered pairs).
std::vector<double> brute_betweenness(const kdense::Graph& g);

std::vector<kdense::NodeId> brute_common_neighbors(const kdense::Graph& g,
                                                   kdense::NodeId u,
                                                   kdense::NodeId v);

std::size_t brute_triangle_count(const kdense::Graph& g);

// Enumerates all 3- or 4-subsets, keeps connected induced subgraphs, and
// classifies them by their sorted degree multiset.
std::map<kdense::MotifClass, std::uint64_t> brute_motifs(const kdense::Graph& g,
                                                         int size);

// Customer cone via Warshall transitive closure over the p2c matrix.
std::set<std::string> brute_cone(const kdense::RelationshipGraph& r,
                                 const std::string& a);

// Realizability of a degree multiset by exhaustive graph enumeration
// (n <= 6).
bool brute_realizable(const std::vector<std::size_t>& degrees);

std::map<std::size_t, std::uint64_t> brute_path_distribution(
    const kdense::Graph& g);

}  // namespace oracle
