#pragma once

#include <iosfwd>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

// Per-edge and per-node k-dense-indices of one graph. An edge has index k*
// when it belongs to H_{k*} but not H_{k*+1}; a node's index is the maximum
// over its incident edges. Isolated nodes get index 2 so node sets partition
// the node set. k_min is the smallest k with H_k non-empty (2 whenever the
// graph has an edge); k_max the largest.
struct DenseDecomposition {
    std::vector<int> edge_index;  // by EdgeId
    std::vector<int> node_index;  // by NodeId
    int k_min = 2;
    int k_max = 2;
};

struct CoreDecomposition {
    std::vector<int> coreness;  // by NodeId
};

// Maximal subgraph in which every edge has multiplicity >= k-2 measured
// inside the subgraph; obtained by pruning below-threshold edges to a
// fixpoint. Nodes left isolated are dropped. H_2 is g minus isolated nodes.
Graph k_dense_subgraph(const Graph& g, int k);

// Full peel: H_{k+1} is derived from H_k by deleting edges whose in-subgraph
// multiplicity drops below k-1, with multiplicities maintained locally per
// deletion. Requires at least one edge.
DenseDecomposition k_dense_decomposition(const Graph& g);

// Edges with index exactly k, ascending EdgeId. Shells partition the edges.
std::vector<EdgeId> k_dense_shell(const DenseDecomposition& d, int k);

// Nodes with index exactly k, ascending NodeId. Sets partition the nodes.
std::vector<NodeId> k_dense_set(const DenseDecomposition& d, int k);

// Standard minimum-degree peeling.
CoreDecomposition k_core_decomposition(const Graph& g);

struct KmaxCore {
    Graph core;
    int k_max = 2;
};

// H_{k_max} as a standalone graph (degrees measured within it). Throws
// DegenerateCoreError on triangle-free graphs, where k_max = 2 and the core
// degenerates to the whole graph.
KmaxCore extract_kmax_core(const Graph& g);

// CSV writers: (node_token,k_dense_index,coreness) and
// (node_token_u,node_token_v,k_dense_index).
void write_node_indices_csv(const Graph& g, const DenseDecomposition& d,
                            const CoreDecomposition& c, std::ostream& out);
void write_edge_indices_csv(const Graph& g, const DenseDecomposition& d,
                            std::ostream& out);

}  // namespace kdense
