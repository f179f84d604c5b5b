#include <doctest.h>

#include <sstream>

#include "kdense/graph.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace kdense;
using testing_support::complete_graph;
using testing_support::gnp;
using testing_support::path_graph;
using testing_support::star_graph;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("load_edge_list applies the last-seen cutoff") {
    std::istringstream in("a b 100\nb c 50\na c 100\n");
    auto snap = load_edge_list(in, 60);
    CHECK(snap.graph.node_count() == 3);
    CHECK(snap.graph.edge_count() == 2);
    CHECK(snap.meta.diagnostics.filtered_by_cutoff == 1);
    auto a = snap.graph.node_of_token("a");
    auto b = snap.graph.node_of_token("b");
    auto c = snap.graph.node_of_token("c");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(snap.graph.has_edge(*a, *b));
    CHECK(snap.graph.has_edge(*a, *c));
    CHECK_FALSE(snap.graph.has_edge(*b, *c));
}

TEST_CASE("load_edge_list keeps timestampless edges under a cutoff") {
    std::istringstream in("a b\nc d 10\n");
    auto snap = load_edge_list(in, 50);
    CHECK(snap.graph.edge_count() == 1);
    CHECK(snap.graph.node_of_token("a").has_value());
    CHECK_FALSE(snap.graph.node_of_token("c").has_value());
}

TEST_CASE("load_edge_list collapses duplicates and reversed duplicates") {
    std::istringstream in("a b\na b\nb a\n");
    auto snap = load_edge_list(in);
    CHECK(snap.graph.node_count() == 2);
    CHECK(snap.graph.edge_count() == 1);
    CHECK(snap.meta.diagnostics.duplicates_collapsed == 2);
}

TEST_CASE("load_edge_list drops self-loops and errors on empty result") {
    std::istringstream in("a a 10\n");
    CHECK_THROWS_AS(load_edge_list(in), EmptyGraphError);
}

TEST_CASE("load_edge_list rejects malformed lines with line numbers") {
    std::istringstream bad_count("a b\nx\n");
    try {
        load_edge_list(bad_count);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream bad_ts("a b zz\n");
    CHECK_THROWS_AS(load_edge_list(bad_ts), ParseError);
    std::istringstream four_tokens("a b 1 2\n");
    CHECK_THROWS_AS(load_edge_list(four_tokens), ParseError);
}

TEST_CASE("load_edge_list skips comments and blank lines") {
    std::istringstream in("# header\n\na b 7 # trailing\n");
    auto snap = load_edge_list(in);
    CHECK(snap.graph.edge_count() == 1);
}

TEST_CASE("canonical writer round-trips to an isomorphic labeled graph") {
    std::istringstream in("7 4\n4 2\n9 7\n2 7\n");
    auto snap = load_edge_list(in);
    std::ostringstream first;
    write_canonical_edges(snap.graph, first);
    std::istringstream again(first.str());
    auto snap2 = load_edge_list(again);
    std::ostringstream second;
    write_canonical_edges(snap2.graph, second);
    CHECK(first.str() == second.str());
    CHECK(snap2.graph.node_count() == snap.graph.node_count());
    CHECK(snap2.graph.edge_count() == snap.graph.edge_count());
}

TEST_CASE("edge_multiplicity on small graphs") {
    auto k3 = complete_graph(3);
    CHECK(edge_multiplicity(k3, 0, 1) == 1);
    auto k5 = complete_graph(5);
    for (const auto& [u, v] : k5.edges()) CHECK(edge_multiplicity(k5, u, v) == 3);
    auto p3 = path_graph(3);
    CHECK(edge_multiplicity(p3, 0, 1) == 0);
    CHECK_THROWS_AS(edge_multiplicity(p3, 0, 2), DomainError);
}

TEST_CASE("common_neighbors matches the membership-test oracle") {
    auto k4 = complete_graph(4);
    CHECK(common_neighbors(k4, 0, 1) == std::vector<NodeId>{2, 3});
    auto star = star_graph(4);
    CHECK(common_neighbors(star, 0, 1).empty());
    CHECK_THROWS_AS(common_neighbors(star, 0, 99), DomainError);

    auto g = gnp(20, 0.3, 1234);
    for (NodeId u = 0; u < 20; ++u)
        for (NodeId v = u + 1; v < 20; ++v)
            CHECK(common_neighbors(g, u, v) ==
                  oracle::brute_common_neighbors(g, u, v));
}

TEST_CASE("multiplicity equals the per-edge triangle count") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = gnp(12, 0.4, 900 + seed);
        std::size_t mult_sum = 0;
        for (const auto& [u, v] : g.edges()) {
            auto m = edge_multiplicity(g, u, v);
            mult_sum += m;
            // count triangles through this edge explicitly
            std::size_t tri = 0;
            for (NodeId w = 0; w < g.node_count(); ++w)
                if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                    ++tri;
            CHECK(m == tri);
        }
        CHECK(mult_sum == 3 * oracle::brute_triangle_count(g));
    }
}

TEST_CASE("density examples") {
    // N=60, M=1703 must land on 0.962 within half a unit in the last digit.
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t m = 0;
    for (NodeId u = 0; u < 60 && m < 1703; ++u)
        for (NodeId v = u + 1; v < 60 && m < 1703; ++v, ++m)
            edges.push_back({u, v});
    auto g = Graph::from_edges(60, std::move(edges));
    REQUIRE(g.edge_count() == 1703);
    CHECK(std::abs(density(g) - 0.962) <= 0.0005);

    for (std::size_t n : {3, 5, 9}) CHECK(density(complete_graph(n)) == 1.0);
    CHECK(density(Graph::from_edges(10, {})) == 0.0);
    CHECK_THROWS_AS(density(Graph::from_edges(1, {})), DomainError);
}

TEST_CASE("average_degree examples and the density identity") {
    CHECK(average_degree(complete_graph(4)) == 3.0);
    CHECK(average_degree(complete_graph(3)) == 2.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = gnp(15, 0.4, 50 + seed);
        CHECK(density(g) == doctest::Approx(average_degree(g) / 14.0).epsilon(1e-12));
    }
}

TEST_CASE("average_degree_fit evaluates a*ln(n)-b") {
    // Frozen from independent high-precision evaluation of 1.3*ln(n)-7.5.
    CHECK(std::abs(average_degree_fit(17858) - 5.2273) <= 0.01);
    CHECK(std::abs(average_degree_fit(42419) - 6.3529) <= 0.01);
    // Root of the fit at n = e^(b/a), up to integer rounding of n.
    const double root_n = std::exp(7.5 / 1.3);
    CHECK(std::abs(average_degree_fit(
              static_cast<std::size_t>(root_n + 0.5))) <= 0.01);
}

TEST_CASE("induced_subgraph keeps exactly the requested edges") {
    auto k4 = complete_graph(4);
    // one triangle's edges
    std::vector<EdgeId> tri;
    for (auto e : {k4.find_edge(0, 1), k4.find_edge(1, 2), k4.find_edge(0, 2)})
        tri.push_back(*e);
    auto h = induced_subgraph(k4, tri);
    CHECK(h.node_count() == 3);
    CHECK(h.edge_count() == 3);

    auto empty = induced_subgraph(k4, {});
    CHECK(empty.node_count() == 0);
    CHECK(empty.edge_count() == 0);

    std::vector<EdgeId> all(k4.edge_count());
    for (EdgeId e = 0; e < k4.edge_count(); ++e) all[e] = e;
    auto whole = induced_subgraph(k4, all);
    CHECK(whole.node_count() == 4);
    CHECK(whole.edge_count() == 6);

    CHECK_THROWS_AS(induced_subgraph(k4, {99}), DomainError);
}

TEST_CASE("builder canonicalizes multigraph input") {
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
}

TEST_SUITE_END();
