#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdense/error.hpp"

namespace kdense {

// Directed provider->customer relationships plus undirected peerings, over
// the same external token space the topology graphs use.
class RelationshipGraph {
public:
    void add_p2c(const std::string& provider, const std::string& customer);
    void add_peer(const std::string& a, const std::string& b);

    bool has_as(const std::string& tok) const;
    std::size_t as_count() const { return customers_.size(); }
    const std::vector<std::string>& as_tokens() const { return tokens_; }

    const std::vector<std::pair<std::string, std::string>>& p2c_edges() const {
        return p2c_list_;
    }
    const std::vector<std::pair<std::string, std::string>>& peer_edges() const {
        return peer_list_;
    }

    // Customers directly below `tok`.
    const std::vector<std::size_t>& customers_of(std::size_t id) const {
        return customers_[id];
    }
    std::optional<std::size_t> id_of(const std::string& tok) const;
    const std::string& token_of(std::size_t id) const { return tokens_[id]; }

private:
    std::size_t intern(const std::string& tok);

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> ids_;
    std::vector<std::vector<std::size_t>> customers_;
    std::vector<std::pair<std::string, std::string>> p2c_list_;
    std::vector<std::pair<std::string, std::string>> peer_list_;
};

// Parses CAIDA-style lines "A|B|r" with r = -1 (A provider of B) or 0
// (peers); '#' starts a comment. Identical duplicates collapse; the same
// pair in two relation classes (or opposing p2c directions) is an error.
RelationshipGraph load_relationships(std::istream& in);

// Ordered (token, score) entries with non-increasing scores.
struct RankedList {
    std::string metric_name;
    std::vector<std::pair<std::string, double>> entries;
};

// ASes reachable from `a` via provider->customer links only, including `a`
// itself. Cycles in noisy inference data are handled by plain reachability.
std::set<std::string> customer_cone(const RelationshipGraph& r,
                                    const std::string& a);

// Sum of per-AS weights over the cone; without a weight map every AS weighs
// 1 (AS-count cone), with one, absent ASes weigh 0.
std::uint64_t cone_weight(
    const RelationshipGraph& r, const std::string& a,
    const std::map<std::string, std::uint64_t>* weights = nullptr);

std::size_t rank_overlap(const std::set<std::string>& s,
                         const RankedList& ranked, std::size_t top_n);

// The n highest-scoring ASes; ties break toward the ascending token.
RankedList top_n_by_metric(const std::map<std::string, double>& values,
                           std::size_t n, const std::string& metric_name);

// Distribution of cone weights over `subset` (default: every AS in r), as
// sorted (value, count) pairs.
std::map<std::uint64_t, std::size_t> cone_distribution(
    const RelationshipGraph& r,
    const std::set<std::string>* subset = nullptr,
    const std::map<std::string, std::uint64_t>* weights = nullptr);

// weight file: CSV lines "as_token,weight".
std::map<std::string, std::uint64_t> load_weights(std::istream& in);

// rank file: CSV lines "rank,as_token,score" ordered by rank.
RankedList load_rank_file(std::istream& in, const std::string& metric_name);

}  // namespace kdense
