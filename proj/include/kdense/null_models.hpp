#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kdense/graph.hpp"
#include "kdense/rng.hpp"

namespace kdense {

// Non-increasing sequence of non-negative integers; the 1K statistic.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<std::size_t> degrees);
    DegreeSequence(std::initializer_list<std::size_t> degrees)
        : DegreeSequence(std::vector<std::size_t>(degrees)) {}
    static DegreeSequence of(const Graph& g);

    const std::vector<std::size_t>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    std::size_t sum() const;

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<std::size_t> degrees_;
};

// Counts of edges between degree classes; the 2K statistic. Keys are
// unordered degree pairs stored as (d1 <= d2).
struct JointDegreeMatrix {
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> entries;

    std::uint64_t total() const;
    bool operator==(const JointDegreeMatrix&) const = default;
};

struct EnsembleSpec {
    int d = 0;  // 0, 1, or 2
    std::size_t instances = 10;
    std::uint64_t seed = 0;
    double swap_factor = 10.0;
};

// Erdos-Gallai test: even sum and all prefix inequalities.
bool is_graphical(const DegreeSequence& s);

// Uniform simple graph with exactly n nodes and m edges.
Graph generate_0k(std::size_t n, std::size_t m, RandomStream rng);

// Deterministic Havel-Hakimi realization followed by ceil(swap_factor*M)
// accepted degree-preserving double edge swaps. Swaps that would create a
// self-loop or parallel edge are rejected and count toward a proposal budget
// of 100*swap_factor*M, so rigid graphs terminate.
Graph generate_1k(const DegreeSequence& s, RandomStream rng,
                  double swap_factor = 10.0);

JointDegreeMatrix joint_degree_matrix(const Graph& g);

// Rewires a copy of g with ceil(swap_factor*M) accepted swaps that exchange
// endpoints of equal degree, leaving the joint degree matrix unchanged.
Graph generate_2k(const Graph& g, RandomStream rng, double swap_factor = 10.0);

// `spec.instances` independent graphs; instance i draws from substream
// seed+i, so ensembles are reproducible and instances are order-independent.
std::vector<Graph> generate_ensemble(const EnsembleSpec& spec,
                                     const Graph& template_graph);

}  // namespace kdense
