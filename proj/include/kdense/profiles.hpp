#pragma once

#include <vector>

#include "kdense/decomposition.hpp"
#include "kdense/graph.hpp"

namespace kdense {

enum class ProfileKind { node_fraction, link_fraction, attachment, set_to_set };

const char* profile_kind_name(ProfileKind k);

struct ProfilePoint {
    double x = 0;   // k-dense-index fraction
    double y = 0;
    int k = 0;      // originating index; midpoint bins keep k of the bin slot
};

// One snapshot's profile: (index fraction, fraction value) points with
// strictly increasing x. node_fraction and link_fraction profiles sum to 1.
struct Profile {
    ProfileKind kind = ProfileKind::node_fraction;
    int k0 = 0;            // set_to_set only
    double bin_width = 0;  // > 0 once binned
    std::vector<ProfilePoint> points;
};

struct AggregatedBin {
    double lo = 0;
    double hi = 0;
    std::size_t sample_count = 0;  // snapshots contributing a point
    double mean = 0;
    double p10 = 0;
    double p90 = 0;
    double min = 0;
    double max = 0;
};

// Per-bin statistics across snapshots; bins tile [0,1] with the configured
// width, and bins nobody contributed to carry sample_count 0 and no
// statistics.
struct AggregatedProfile {
    double bin_width = 0;
    std::vector<AggregatedBin> bins;
};

// Eq-style x-axis normalization: (k - k_min)/(k_max - k_min).
double normalize_index(int k, int k_min, int k_max);

Profile node_fraction_profile(const DenseDecomposition& d, std::size_t n_total);
Profile link_fraction_profile(const DenseDecomposition& d, std::size_t m_total);

// Fraction of links with one or two ends attached to each k-dense-set.
// Values may sum to more than 1 since a link touches up to two sets.
Profile attachment_profile(const Graph& g, const DenseDecomposition& d);

// Of the links attached to set k0, the fraction whose other endpoint lies in
// set k; links internal to set k0 count toward k = k0. Rows sum to 1.
Profile set_to_set_profile(const Graph& g, const DenseDecomposition& d, int k0);

// Linear binning on [0,1]: bins [i*w, (i+1)*w) with the last bin closed;
// per-bin y is the sum of member values and x the bin midpoint. Only
// occupied bins are emitted, so mass is conserved exactly.
Profile bin_profile(const Profile& p, double bin_width);

AggregatedProfile aggregate_profiles(const std::vector<Profile>& ps);

struct SetSummary {
    std::size_t node_count = 0;
    double mean_degree = 0;
    double mean_clustering = 0;
    double mean_betweenness = 0;
};

// Mean degree/clustering/betweenness over the k-dense-set, all metrics
// computed on the full graph. The precomputed overload avoids repeating the
// all-pairs betweenness when summarizing several sets of one graph.
SetSummary set_summary(const Graph& g, const DenseDecomposition& d, int k);
SetSummary set_summary(const Graph& g, const DenseDecomposition& d, int k,
                       const std::vector<double>& clustering_by_node,
                       const std::vector<double>& betweenness_by_node);

}  // namespace kdense
