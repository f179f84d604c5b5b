#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

// Connected induced subgraph classes for the size-3 and size-4 censuses.
enum class MotifClass {
    path3,
    triangle,
    path4,
    star4,
    cycle4,
    paw,
    diamond,
    clique4,
};

const char* motif_name(MotifClass c);
std::vector<MotifClass> motif_classes(int size);

struct MotifCensus {
    int size = 3;
    std::map<MotifClass, std::uint64_t> counts;
};

struct ZScore {
    double x = 0;
    double mu = 0;
    double sigma = 0;
    double z = 0;          // +-inf when divergent
    bool divergent = false;  // sigma == 0 with x != mu
};

struct DegreeBin {
    double degree_lo = 0;  // [lo, hi)
    double degree_hi = 0;
    std::size_t count = 0;
    double mean = 0;
    double p80_low = 0;   // 10th percentile, nearest rank
    double p80_high = 0;  // 90th percentile, nearest rank
    double min = 0;
    double max = 0;
};

struct DegreeBinnedSeries {
    std::size_t bins_per_decade = 10;
    std::vector<DegreeBin> bins;
};

// Local clustering: triangles at v over deg(v)(deg(v)-1)/2; 0 for deg < 2.
double clustering(const Graph& g, NodeId v);
std::vector<double> clustering_all(const Graph& g);

double average_neighbor_degree(const Graph& g, NodeId v);

// Exact shortest-path betweenness, Brandes accumulation: endpoints excluded,
// unnormalized, each unordered pair counted once. BFS sources are processed
// in fixed blocks whose partial sums are reduced in block order, so the
// result is bit-identical for any thread count (0 = hardware concurrency).
std::vector<double> betweenness(const Graph& g, unsigned n_threads = 0);

// Histogram over all unordered connected pairs.
std::map<std::size_t, std::uint64_t> shortest_path_distribution(const Graph& g);

// Counts of connected induced subgraphs of the given size (3 or 4), computed
// from triangle and wedge combinatorics rather than subgraph enumeration.
MotifCensus motif_census(const Graph& g, int size);

// z = (x - mu) / sigma per class, with ensemble mean and population standard
// deviation. sigma = 0 yields z = 0 when x = mu and a divergent sentinel
// otherwise.
std::map<MotifClass, ZScore> motif_zscores(
    const MotifCensus& target, const std::vector<MotifCensus>& ensemble);

// Groups nodes by logarithmic degree ranges and summarizes their values with
// mean, central-80% band, min, and max. Degree-0 nodes cannot be log-binned
// and are skipped.
DegreeBinnedSeries logbin_by_degree(const std::map<NodeId, double>& values,
                                    const Graph& g,
                                    std::size_t bins_per_decade);

// Nearest-rank percentile of a sorted sample, p in [0, 100].
double percentile_nearest_rank(const std::vector<double>& sorted, double p);

}  // namespace kdense
