#include <catch2/catch_amalgamated.hpp>

#include "omax/dimacs.hpp"
#include "omax/random.hpp"

using namespace omax;

TEST_CASE("edge probability extremes", "[random]") {
    CHECK(erdos_renyi(12, 0.0, 123) == null_graph(12));
    CHECK(erdos_renyi(12, 1.0, 123) == complete_graph(12));
}

TEST_CASE("identical parameters give byte-identical graphs", "[random]") {
    graph a = erdos_renyi(15, 0.5, 777);
    graph b = erdos_renyi(15, 0.5, 777);
    CHECK(a == b);
    CHECK(write_dimacs(a) == write_dimacs(b));
}

TEST_CASE("generator output is pinned", "[random]") {
    // frozen once from the documented splitmix64 pair scan; any change to the
    // generator's semantics breaks replayability of recorded campaigns
    CHECK(erdos_renyi(10, 0.5, 42).edge_count() == 21);
    graph g = erdos_renyi(6, 0.3, 7);
    CHECK(g.edges() == edge_list{{1, 3}, {2, 3}, {2, 6}, {3, 5}});
}

TEST_CASE("seed derivation is pinned", "[random]") {
    CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(derive_seed(1, 0, 0) == 0x421daf3033e887a3ULL);
    CHECK(derive_seed(1, 2, 3) == 0xd62a7f6e291fef64ULL);
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}

TEST_CASE("generator rejects bad parameters", "[random]") {
    CHECK_THROWS_AS(erdos_renyi(0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(5, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("edge counts concentrate near n-choose-2 times p", "[random]") {
    // mean 95, sd about 6.9 for n=20, p=0.5; bounds are 6 sigma wide
    graph g = erdos_renyi(20, 0.5, 2024);
    CHECK(g.edge_count() > 50);
    CHECK(g.edge_count() < 140);
}
