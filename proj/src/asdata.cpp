#include "kdense/asdata.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>

namespace kdense {

std::size_t RelationshipGraph::intern(const std::string& tok) {
    auto it = ids_.find(tok);
    if (it != ids_.end()) return it->second;
    std::size_t id = tokens_.size();
    tokens_.push_back(tok);
    ids_.emplace(tok, id);
    customers_.emplace_back();
    return id;
}

void RelationshipGraph::add_p2c(const std::string& provider,
                                const std::string& customer) {
    if (provider == customer)
        throw DomainError("self relation: " + provider);
    std::size_t p = intern(provider);
    std::size_t c = intern(customer);
    customers_[p].push_back(c);
    p2c_list_.emplace_back(provider, customer);
}

void RelationshipGraph::add_peer(const std::string& a, const std::string& b) {
    if (a == b) throw DomainError("self relation: " + a);
    intern(a);
    intern(b);
    peer_list_.emplace_back(std::min(a, b), std::max(a, b));
}

bool RelationshipGraph::has_as(const std::string& tok) const {
    return ids_.count(tok) != 0;
}

std::optional<std::size_t> RelationshipGraph::id_of(
    const std::string& tok) const {
    auto it = ids_.find(tok);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<std::string> split_on(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string strip(std::string s) {
    auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i])) ++i;
    return s.substr(i);
}

}  // namespace

RelationshipGraph load_relationships(std::istream& in) {
    RelationshipGraph r;
    // unordered pair -> (class, provider token); class -1 = p2c, 0 = peer
    std::map<std::pair<std::string, std::string>, std::pair<int, std::string>>
        seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        auto fields = split_on(line, '|');
        if (fields.size() != 3)
            throw ParseError(lineno, "expected 'A|B|r'");
        std::string a = strip(fields[0]), b = strip(fields[1]);
        std::string rel = strip(fields[2]);
        if (a.empty() || b.empty())
            throw ParseError(lineno, "empty AS token");
        if (a == b) throw ParseError(lineno, "self relation '" + a + "'");
        int cls;
        if (rel == "-1")
            cls = -1;
        else if (rel == "0")
            cls = 0;
        else
            throw ParseError(lineno, "relation must be -1 or 0, got '" + rel +
                                         "'");
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        std::string provider = cls == -1 ? a : "";
        auto [it, fresh] = seen.emplace(key, std::make_pair(cls, provider));
        if (!fresh) {
            if (it->second != std::make_pair(cls, provider))
                throw ParseError(lineno, "conflicting relation for " + a +
                                             "|" + b);
            continue;  // identical duplicate
        }
        if (cls == -1)
            r.add_p2c(a, b);
        else
            r.add_peer(a, b);
    }
    return r;
}

std::set<std::string> customer_cone(const RelationshipGraph& r,
                                    const std::string& a) {
    auto start = r.id_of(a);
    if (!start) throw DomainError("customer_cone: unknown AS " + a);
    std::vector<bool> visited(r.as_count(), false);
    std::vector<std::size_t> stack{*start};
    visited[*start] = true;
    std::set<std::string> cone;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        cone.insert(r.token_of(v));
        for (std::size_t c : r.customers_of(v)) {
            if (!visited[c]) {
                visited[c] = true;
                stack.push_back(c);
            }
        }
    }
    return cone;
}

std::uint64_t cone_weight(const RelationshipGraph& r, const std::string& a,
                          const std::map<std::string, std::uint64_t>* weights) {
    auto cone = customer_cone(r, a);
    if (!weights) return cone.size();
    std::uint64_t sum = 0;
    for (const auto& tok : cone) {
        auto it = weights->find(tok);
        if (it != weights->end()) sum += it->second;
    }
    return sum;
}

std::size_t rank_overlap(const std::set<std::string>& s,
                         const RankedList& ranked, std::size_t top_n) {
    if (top_n > ranked.entries.size())
        throw DomainError("rank_overlap: top_n exceeds ranked list size");
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < top_n; ++i)
        if (s.count(ranked.entries[i].first)) ++overlap;
    return overlap;
}

RankedList top_n_by_metric(const std::map<std::string, double>& values,
                           std::size_t n, const std::string& metric_name) {
    if (n > values.size())
        throw DomainError("top_n_by_metric: n exceeds value count");
    std::vector<std::pair<std::string, double>> entries(values.begin(),
                                                        values.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    entries.resize(n);
    return RankedList{metric_name, std::move(entries)};
}

std::map<std::uint64_t, std::size_t> cone_distribution(
    const RelationshipGraph& r, const std::set<std::string>* subset,
    const std::map<std::string, std::uint64_t>* weights) {
    std::map<std::uint64_t, std::size_t> hist;
    if (subset) {
        for (const auto& tok : *subset) ++hist[cone_weight(r, tok, weights)];
    } else {
        for (const auto& tok : r.as_tokens())
            ++hist[cone_weight(r, tok, weights)];
    }
    return hist;
}

std::map<std::string, std::uint64_t> load_weights(std::istream& in) {
    std::map<std::string, std::uint64_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        auto fields = split_on(line, ',');
        if (fields.size() != 2)
            throw ParseError(lineno, "expected 'as_token,weight'");
        std::string tok = strip(fields[0]);
        std::string w = strip(fields[1]);
        std::uint64_t weight = 0;
        auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
        if (ec != std::errc{} || p != w.data() + w.size())
            throw ParseError(lineno, "bad weight '" + w + "'");
        out[tok] = weight;
    }
    return out;
}

RankedList load_rank_file(std::istream& in, const std::string& metric_name) {
    RankedList out;
    out.metric_name = metric_name;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        auto fields = split_on(line, ',');
        if (fields.size() != 3)
            throw ParseError(lineno, "expected 'rank,as_token,score'");
        std::string score_s = strip(fields[2]);
        char* end = nullptr;
        double score = std::strtod(score_s.c_str(), &end);
        if (end != score_s.c_str() + score_s.size())
            throw ParseError(lineno, "bad score '" + score_s + "'");
        out.entries.emplace_back(strip(fields[1]), score);
    }
    return out;
}

}  // namespace kdense
