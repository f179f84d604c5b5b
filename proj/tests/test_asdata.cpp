#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kdense/asdata.hpp"
#include "kdense/rng.hpp"
#include "support/oracles.hpp"

using namespace kdense;

namespace {

RelationshipGraph chain123() {
    std::istringstream in("1|2|-1\n2|3|-1\n");
    return load_relationships(in);
}

// Random p2c digraph over n ASes, ~density p, possibly cyclic.
RelationshipGraph random_rel(std::size_t n, double p, std::uint64_t seed) {
    RandomStream rng(seed);
    RelationshipGraph r;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (rng.uniform_real() < p)
                r.add_p2c(std::to_string(a), std::to_string(b));
        }
    // make sure every AS exists even if it drew no relations
    for (std::size_t a = 0; a < n; ++a)
        if (!r.has_as(std::to_string(a)))
            r.add_peer(std::to_string(a), std::to_string((a + 1) % n));
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("asdata");

TEST_CASE("load_relationships") {
    auto r = chain123();
    CHECK(r.p2c_edges().size() == 2);
    CHECK(r.peer_edges().empty());

    std::istringstream peers("1|2|0\n");
    auto rp = load_relationships(peers);
    CHECK(rp.p2c_edges().empty());
    CHECK(rp.peer_edges().size() == 1);

    std::istringstream conflict("1|2|-1\n1|2|0\n");
    CHECK_THROWS_AS(load_relationships(conflict), ParseError);

    std::istringstream reversed_p2c("1|2|-1\n2|1|-1\n");
    CHECK_THROWS_AS(load_relationships(reversed_p2c), ParseError);

    std::istringstream dup("1|2|-1\n1|2|-1\n2|1|0 # comment\n3|4|0\n4|3|0\n");
    CHECK_THROWS_AS(load_relationships(dup), ParseError);  // 2|1|0 conflicts

    std::istringstream dup_ok("1|2|-1\n1|2|-1\n3|4|0\n4|3|0\n");
    auto rd = load_relationships(dup_ok);
    CHECK(rd.p2c_edges().size() == 1);
    CHECK(rd.peer_edges().size() == 1);

    std::istringstream selfrel("1|1|0\n");
    CHECK_THROWS_AS(load_relationships(selfrel), ParseError);
    std::istringstream badrel("1|2|7\n");
    CHECK_THROWS_AS(load_relationships(badrel), ParseError);
    std::istringstream short_line("1|2\n");
    CHECK_THROWS_AS(load_relationships(short_line), ParseError);
}

TEST_CASE("customer_cone on chains, peers, and cycles") {
    auto r = chain123();
    CHECK(customer_cone(r, "1") == std::set<std::string>{"1", "2", "3"});
    CHECK(customer_cone(r, "3") == std::set<std::string>{"3"});
    CHECK_THROWS_AS(customer_cone(r, "9"), DomainError);

    std::istringstream peers("1|2|0\n");
    auto rp = load_relationships(peers);
    CHECK(customer_cone(rp, "1") == std::set<std::string>{"1"});

    // Cycles terminate and return the reachable set.
    std::istringstream cyc("1|2|-1\n2|3|-1\n3|1|-1\n");
    auto rc = load_relationships(cyc);
    CHECK(customer_cone(rc, "2") == std::set<std::string>{"1", "2", "3"});
}

TEST_CASE("customer_cone equals the transitive-closure oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto r = random_rel(15, 0.12, 9900 + seed);
        for (const auto& tok : r.as_tokens())
            CHECK(customer_cone(r, tok) == oracle::brute_cone(r, tok));
    }
}

TEST_CASE("cone monotonicity along p2c edges") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto r = random_rel(12, 0.15, 31000 + seed);
        for (const auto& [p, c] : r.p2c_edges()) {
            auto cp = customer_cone(r, p);
            auto cc = customer_cone(r, c);
            CHECK(std::includes(cp.begin(), cp.end(), cc.begin(), cc.end()));
        }
    }
}

TEST_CASE("cone_weight") {
    auto r = chain123();
    std::map<std::string, std::uint64_t> tens{{"1", 10}, {"2", 10}, {"3", 10}};
    CHECK(cone_weight(r, "1", &tens) == 30);
    CHECK(cone_weight(r, "1") == 3);  // AS-count cone
    std::map<std::string, std::uint64_t> partial{{"2", 5}};
    CHECK(cone_weight(r, "1", &partial) == 5);  // absent ASes weigh 0
}

TEST_CASE("rank_overlap") {
    RankedList ranked{"degree", {}};
    std::set<std::string> s;
    for (int i = 0; i < 60; ++i) {
        ranked.entries.push_back({std::to_string(i), 100.0 - i});
        s.insert(std::to_string(i));
    }
    CHECK(rank_overlap(s, ranked, 60) == 60);
    std::set<std::string> disjoint{"x", "y"};
    CHECK(rank_overlap(disjoint, ranked, 60) == 0);
    CHECK(rank_overlap(s, ranked, 10) == 10);
    CHECK_THROWS_AS(rank_overlap(s, ranked, 61), DomainError);

    // overlap <= min(|s|, n)
    std::set<std::string> small{"1", "2", "99"};
    auto o = rank_overlap(small, ranked, 30);
    CHECK(o <= 3);
    CHECK(o == 2);
}

TEST_CASE("top_n_by_metric ordering and ties") {
    std::map<std::string, double> degs{{"a", 3}, {"b", 2}, {"c", 1}};
    auto top = top_n_by_metric(degs, 2, "degree");
    REQUIRE(top.entries.size() == 2);
    CHECK(top.entries[0].first == "a");
    CHECK(top.entries[1].first == "b");

    std::map<std::string, double> equal{{"d", 1}, {"c", 1}, {"b", 1}, {"a", 1}};
    auto tied = top_n_by_metric(equal, 2, "flat");
    CHECK(tied.entries[0].first == "a");
    CHECK(tied.entries[1].first == "b");

    CHECK_THROWS_AS(top_n_by_metric(degs, 4, "degree"), DomainError);
}

TEST_CASE("cone_distribution") {
    auto r = chain123();
    auto hist = cone_distribution(r);
    CHECK(hist == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 1}, {3, 1}});

    std::istringstream peers("1|2|0\n3|4|0\n");
    auto rp = load_relationships(peers);
    auto flat = cone_distribution(rp);
    CHECK(flat == std::map<std::uint64_t, std::size_t>{{1, 4}});

    std::set<std::string> subset{"1", "3"};
    auto sub = cone_distribution(r, &subset);
    CHECK(sub == std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 1}});
}

TEST_CASE("weight and rank file parsing") {
    std::istringstream win("a,10\nb,20\n# comment\n");
    auto w = load_weights(win);
    CHECK(w.at("a") == 10);
    CHECK(w.at("b") == 20);
    std::istringstream bad("a,xx\n");
    CHECK_THROWS_AS(load_weights(bad), ParseError);

    std::istringstream rin("1,as9,99.5\n2,as3,50\n");
    auto ranked = load_rank_file(rin, "asrank");
    REQUIRE(ranked.entries.size() == 2);
    CHECK(ranked.entries[0].first == "as9");
    CHECK(ranked.entries[0].second == doctest::Approx(99.5));
    std::istringstream badr("1,as9\n");
    CHECK_THROWS_AS(load_rank_file(badr, "x"), ParseError);
}

TEST_SUITE_END();
