#include "kdense/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kdense/metrics.hpp"

namespace kdense {

const char* profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::node_fraction: return "node_fraction";
        case ProfileKind::link_fraction: return "link_fraction";
        case ProfileKind::attachment: return "attachment";
        case ProfileKind::set_to_set: return "set_to_set";
    }
    return "?";
}

double normalize_index(int k, int k_min, int k_max) {
    if (k_max == k_min)
        throw DomainError("normalize_index: degenerate range k_max = k_min");
    if (k < k_min || k > k_max)
        throw DomainError("normalize_index: k outside [k_min, k_max]");
    return static_cast<double>(k - k_min) / static_cast<double>(k_max - k_min);
}

namespace {

// Profiles of a decomposition whose every index equals k_min collapse to a
// single point; it sits at x = 0, matching triangle-free snapshots where the
// whole graph is the 2-dense-set.
double profile_x(int k, const DenseDecomposition& d) {
    if (d.k_max == d.k_min) return 0.0;
    return normalize_index(k, d.k_min, d.k_max);
}

Profile fraction_profile(const DenseDecomposition& d, ProfileKind kind,
                         const std::vector<int>& indices, std::size_t total) {
    std::map<int, std::size_t> tally;
    for (int k : indices) ++tally[k];
    Profile p;
    p.kind = kind;
    for (const auto& [k, count] : tally)
        p.points.push_back({profile_x(k, d),
                            static_cast<double>(count) /
                                static_cast<double>(total),
                            k});
    return p;
}

}  // namespace

Profile node_fraction_profile(const DenseDecomposition& d,
                              std::size_t n_total) {
    if (n_total < 1)
        throw DomainError("node_fraction_profile: n_total must be >= 1");
    return fraction_profile(d, ProfileKind::node_fraction, d.node_index,
                            n_total);
}

Profile link_fraction_profile(const DenseDecomposition& d,
                              std::size_t m_total) {
    if (m_total < 1)
        throw DomainError("link_fraction_profile: m_total must be >= 1");
    return fraction_profile(d, ProfileKind::link_fraction, d.edge_index,
                            m_total);
}

Profile attachment_profile(const Graph& g, const DenseDecomposition& d) {
    // Links touching each set, counted once per set even when both ends are
    // in it.
    std::map<int, std::size_t> touched;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int ku = d.node_index[u], kv = d.node_index[v];
        ++touched[ku];
        if (kv != ku) ++touched[kv];
    }
    Profile p;
    p.kind = ProfileKind::attachment;
    const double m = static_cast<double>(g.edge_count());
    for (const auto& [k, count] : touched)
        p.points.push_back({profile_x(k, d),
                            static_cast<double>(count) / m, k});
    return p;
}

Profile set_to_set_profile(const Graph& g, const DenseDecomposition& d,
                           int k0) {
    bool k0_nonempty = false;
    for (int ki : d.node_index)
        if (ki == k0) {
            k0_nonempty = true;
            break;
        }
    if (!k0_nonempty)
        throw DomainError("set_to_set_profile: empty k0-dense-set");

    std::map<int, std::size_t> other_end;
    std::size_t attached = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int ku = d.node_index[u], kv = d.node_index[v];
        if (ku != k0 && kv != k0) continue;
        ++attached;
        // Classified by the other endpoint; internal links land on k0 itself.
        ++other_end[ku == k0 ? kv : ku];
    }
    Profile p;
    p.kind = ProfileKind::set_to_set;
    p.k0 = k0;
    for (const auto& [k, count] : other_end)
        p.points.push_back({profile_x(k, d),
                            static_cast<double>(count) /
                                static_cast<double>(attached),
                            k});
    return p;
}

Profile bin_profile(const Profile& p, double bin_width) {
    if (!(bin_width > 0.0) || bin_width > 1.0)
        throw DomainError("bin_profile: bin width must be in (0, 1]");
    const std::size_t n_bins = static_cast<std::size_t>(
        std::ceil(1.0 / bin_width - 1e-12));
    std::map<std::size_t, double> mass;
    for (const auto& pt : p.points) {
        auto bin = static_cast<std::size_t>(
            std::floor(pt.x / bin_width + 1e-9));
        bin = std::min(bin, n_bins - 1);  // closed last bin
        mass[bin] += pt.y;
    }
    Profile out;
    out.kind = p.kind;
    out.k0 = p.k0;
    out.bin_width = bin_width;
    for (const auto& [bin, y] : mass)
        out.points.push_back(
            {(static_cast<double>(bin) + 0.5) * bin_width, y,
             static_cast<int>(bin)});
    return out;
}

AggregatedProfile aggregate_profiles(const std::vector<Profile>& ps) {
    if (ps.empty())
        throw DomainError("aggregate_profiles: need at least one profile");
    const double w = ps.front().bin_width;
    if (!(w > 0.0))
        throw DomainError("aggregate_profiles: profiles must be binned");
    for (const auto& p : ps)
        if (p.bin_width != w)
            throw DomainError("aggregate_profiles: bin width mismatch");

    const std::size_t n_bins =
        static_cast<std::size_t>(std::ceil(1.0 / w - 1e-12));
    std::vector<std::vector<double>> samples(n_bins);
    for (const auto& p : ps)
        for (const auto& pt : p.points) {
            auto b = static_cast<std::size_t>(pt.k);
            if (b >= n_bins)
                throw DomainError("aggregate_profiles: bin index out of range");
            samples[b].push_back(pt.y);
        }

    AggregatedProfile agg;
    agg.bin_width = w;
    agg.bins.resize(n_bins);
    for (std::size_t b = 0; b < n_bins; ++b) {
        auto& bin = agg.bins[b];
        bin.lo = static_cast<double>(b) * w;
        bin.hi = std::min(1.0, static_cast<double>(b + 1) * w);
        auto& vals = samples[b];
        bin.sample_count = vals.size();
        if (vals.empty()) continue;
        std::sort(vals.begin(), vals.end());
        double sum = 0;
        for (double v : vals) sum += v;
        bin.mean = sum / static_cast<double>(vals.size());
        bin.p10 = percentile_nearest_rank(vals, 10.0);
        bin.p90 = percentile_nearest_rank(vals, 90.0);
        bin.min = vals.front();
        bin.max = vals.back();
    }
    return agg;
}

SetSummary set_summary(const Graph& g, const DenseDecomposition& d, int k,
                       const std::vector<double>& clustering_by_node,
                       const std::vector<double>& betweenness_by_node) {
    auto members = k_dense_set(d, k);
    if (members.empty())
        throw DomainError("set_summary: empty k-dense-set");
    SetSummary s;
    s.node_count = members.size();
    double deg = 0, clu = 0, bet = 0;
    for (NodeId v : members) {
        deg += static_cast<double>(g.degree(v));
        clu += clustering_by_node[v];
        bet += betweenness_by_node[v];
    }
    const double n = static_cast<double>(members.size());
    s.mean_degree = deg / n;
    s.mean_clustering = clu / n;
    s.mean_betweenness = bet / n;
    return s;
}

SetSummary set_summary(const Graph& g, const DenseDecomposition& d, int k) {
    return set_summary(g, d, k, clustering_all(g), betweenness(g));
}

}  // namespace kdense
