#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orient/closed_forms.hpp"
#include "orient/graph.hpp"
#include "orient/orientation.hpp"

using namespace orient;

TEST_CASE("k1ll closed form, small values") {
    CHECK(k1ll_count(1) == 6);
    CHECK(k1ll_count(2) == 82);
    CHECK(k1ll_count(3) == 2754);
    // frozen from the 2^24 exhaustive oracle on K_{1,4,4}
    CHECK(k1ll_count(4) == 271618);
    CHECK_THROWS_AS(k1ll_count(0), std::invalid_argument);
    CHECK_THROWS_AS(k1ll_count(21), std::invalid_argument);
}

TEST_CASE("k1ll matches the oracle where the oracle can run") {
    for (int ell = 1; ell <= 3; ++ell)
        CHECK(k1ll_count(ell) == oracle_count(complete_multipartite({1, ell, ell})));
    // l = 4 has 24 edges; the propagation engine stands in for the oracle
    CHECK(k1ll_count(4) == count_orientations(complete_multipartite({1, 4, 4})));
}

TEST_CASE("bipartite maximum 2^floor(n^2/4)") {
    CHECK(bipartite_max(1) == 1);
    CHECK(bipartite_max(2) == 2);
    CHECK(bipartite_max(3) == 4);
    CHECK(bipartite_max(8) == 65536);
    CHECK(bipartite_max(9) == pow2(20));
    for (int n = 2; n <= 8; ++n) {
        Graph b = complete_multipartite({n / 2, (n + 1) / 2});
        CHECK(bipartite_max(n) == pow2(b.edge_count()));
        CHECK(bipartite_max(n) == count_orientations(b));
    }
}

TEST_CASE("vertex-against-clique corollary bound r^2 - C(r-1,2)") {
    CHECK(corollary_bound(2) == 4);
    CHECK(corollary_bound(3) == 8);
    CHECK(corollary_bound(4) == 13);
    CHECK(corollary_bound(5) == 19);
    CHECK_THROWS_AS(corollary_bound(1), std::invalid_argument);
}

TEST_CASE("edge-against-clique bound (du+1)(dv+1) - C(duv+1,2)") {
    CHECK(edge_kr_bound(4, 4, 3) == 19);
    CHECK(edge_kr_bound(3, 3, 3) == 10);
    CHECK(edge_kr_bound(2, 1, 1) == 5);
    CHECK(edge_kr_bound(0, 0, 0) == 1);
    CHECK_THROWS_AS(edge_kr_bound(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(edge_kr_bound(2, 2, -1), std::invalid_argument);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(8) == 40320);
    CHECK(factorial(20) == Count("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
    CHECK_THROWS_AS(factorial(31), std::invalid_argument);
}

TEST_CASE("exact arithmetic helpers") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(100) == Count("1267650600228229401496703205376"));
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(9, 100) == ipow(3, 200));
    CHECK(binom(7, 3) == 35);
    CHECK(binom(3, 5) == 0);
}
