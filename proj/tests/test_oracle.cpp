#include <catch2/catch_amalgamated.hpp>

#include "omax/oracle.hpp"
#include "omax/random.hpp"
#include "test_util.hpp"

using namespace omax;

TEST_CASE("exhaustive oracle", "[oracle]") {
    oracle_result fixture = brute_force_omega(testutil::star_triangle());
    CHECK(fixture.omega == 3);
    CHECK(fixture.witness == vertex_set{5, 6, 7});

    CHECK(brute_force_omega(complete_graph(5)).omega == 5);

    oracle_result nullg = brute_force_omega(null_graph(6));
    CHECK(nullg.omega == 1);
    CHECK(nullg.witness == vertex_set{1});

    CHECK_THROWS_AS(brute_force_omega(null_graph(25)), std::invalid_argument);
}

TEST_CASE("witness is the lexicographically smallest maximum clique", "[oracle]") {
    // two triangles: {2,3,4} and {1,5,6}; the latter is lexicographically first
    graph g = graph_from_edges(6, {{2, 3}, {2, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}});
    oracle_result res = brute_force_omega(g);
    CHECK(res.omega == 3);
    CHECK(res.witness == vertex_set{1, 5, 6});
}

TEST_CASE("branch and bound", "[oracle]") {
    CHECK(branch_and_bound_omega(testutil::star_triangle()).omega == 3);
    CHECK(branch_and_bound_omega(complement(null_graph(10))).omega == 10);

    // pinned instance, exact value frozen from an independent enumeration
    graph g30 = erdos_renyi(30, 0.5, 7);
    REQUIRE(g30.edge_count() == 220);
    oracle_result res = branch_and_bound_omega(g30);
    CHECK(res.omega == 7);
    CHECK(is_clique(g30, res.witness));
    CHECK(res.witness.size() == 7);

    CHECK_THROWS_AS(branch_and_bound_omega(complete_graph(12), 5), budget_exceeded);
}

TEST_CASE("maximal clique enumeration", "[oracle]") {
    auto cliques = enumerate_maximal_cliques(testutil::star_triangle());
    std::vector<vertex_set> expected = {{1, 2}, {1, 3}, {1, 4}, {5, 6, 7}};
    CHECK(cliques == expected);

    auto k4 = enumerate_maximal_cliques(complete_graph(4));
    CHECK(k4 == std::vector<vertex_set>{{1, 2, 3, 4}});

    auto null3 = enumerate_maximal_cliques(null_graph(3));
    CHECK(null3 == std::vector<vertex_set>{{1}, {2}, {3}});

    CHECK_THROWS_AS(enumerate_maximal_cliques(null_graph(21)), std::invalid_argument);
}

TEST_CASE("the oracles agree with each other", "[oracle]") {
    omax::splitmix64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(14));
        double p = static_cast<double>(rng.next_below(11)) / 10.0;
        graph g = erdos_renyi(n, p, rng.next());

        oracle_result brute = brute_force_omega(g);
        oracle_result bnb = branch_and_bound_omega(g);
        CHECK(brute.omega == bnb.omega);
        CHECK(is_clique(g, brute.witness));
        CHECK(is_clique(g, bnb.witness));
        CHECK(static_cast<int>(bnb.witness.size()) == bnb.omega);

        auto maximal = enumerate_maximal_cliques(g);
        std::size_t largest = 0;
        for (const auto& c : maximal) {
            CHECK(is_maximal_clique(g, c));
            largest = std::max(largest, c.size());
        }
        CHECK(static_cast<int>(largest) == brute.omega);
    }
}

TEST_CASE("removing a vertex never raises the clique number", "[oracle]") {
    omax::splitmix64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(11));
        graph g = erdos_renyi(n, 0.5, rng.next());
        int omega = brute_force_omega(g).omega;
        for (int v = 1; v <= n; ++v) {
            vertex_set rest;
            for (int u = 1; u <= n; ++u)
                if (u != v)
                    rest.push_back(u);
            if (rest.empty())
                continue;
            CHECK(brute_force_omega(induced_subgraph(g, rest).g).omega <= omega);
        }
    }
}

TEST_CASE("removing either end of a non-edge preserves the clique number", "[oracle]") {
    omax::splitmix64 rng(78);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(11));
        graph g = erdos_renyi(n, 0.5, rng.next());
        int omega = brute_force_omega(g).omega;
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
                if (g.adjacent(x, y))
                    continue;
                vertex_set no_x, no_y;
                for (int u = 1; u <= n; ++u) {
                    if (u != x)
                        no_x.push_back(u);
                    if (u != y)
                        no_y.push_back(u);
                }
                int without_x = brute_force_omega(induced_subgraph(g, no_x).g).omega;
                int without_y = brute_force_omega(induced_subgraph(g, no_y).g).omega;
                CHECK(omega == std::max(without_x, without_y));
            }
    }
}

TEST_CASE("a universal vertex raises the clique number by exactly one", "[oracle]") {
    omax::splitmix64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(10));
        graph j = erdos_renyi(n, 0.5, rng.next());
        edge_list edges = j.edges();
        for (int u = 1; u <= n; ++u)
            edges.emplace_back(u, n + 1);
        graph h = graph_from_edges(n + 1, edges);
        CHECK(brute_force_omega(h).omega == brute_force_omega(j).omega + 1);
    }
}
