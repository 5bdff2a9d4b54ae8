#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orient/enumerate.hpp"
#include "orient/graph.hpp"
#include "orient/orientation.hpp"

using namespace orient;

namespace {
Graph Kn(int n) { return complete_multipartite(std::vector<int>(n, 1)); }
}

TEST_CASE("oracle on tiny graphs") {
    CHECK(oracle_count(Kn(3)) == 6);
    CHECK(oracle_count(Graph(3, {{0, 1}, {1, 2}})) == 4);  // path, no triangle
    CHECK(oracle_count(Kn(4)) == 24);
    // K_4 minus one edge
    CHECK(oracle_count(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})) == 18);
    CHECK(oracle_count(Graph(0)) == 1);
    CHECK(oracle_count(Graph(5)) == 1);
    CHECK_THROWS_AS(oracle_count(complete_multipartite({8, 8})), std::invalid_argument);
}

TEST_CASE("engine matches oracle on every class with n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : generate_all(n)) {
            CAPTURE(emit_graph6(g));
            CHECK(count_orientations(g) == oracle_count(g));
        }
}

TEST_CASE("transitive tournament counts are factorials") {
    Count f = 1;
    for (int r = 1; r <= 8; ++r) {
        f *= r;
        CHECK(count_orientations(Kn(r)) == f);
    }
}

TEST_CASE("known counts") {
    CHECK(count_orientations(complete_multipartite({4, 4})) == 65536);
    CHECK(count_orientations(complete_multipartite({1, 2, 2})) == 82);
    CHECK(count_orientations(complete_multipartite({1, 3, 3})) == 2754);
    // frozen from the 2^24 exhaustive oracle (and the closed form agrees)
    CHECK(count_orientations(complete_multipartite({1, 4, 4})) == 271618);
}

TEST_CASE("triangle-free graphs count 2^m") {
    for (const Graph& g : generate_all(6)) {
        if (!triangles_of(g).empty()) continue;
        CHECK(count_orientations(g) == pow2(g.edge_count()));
    }
}

TEST_CASE("is_cyclic_triangle_free") {
    Graph k3 = Kn(3);
    // dir bits in edge-list order (0,1), (0,2), (1,2); 0 = lower to higher
    CHECK(is_cyclic_triangle_free(k3, {{0, 0, 0}}));  // 0 -> 1 -> 2
    // 0->1, 2->0, 1->2 is the directed 3-cycle, as is its reversal
    CHECK(!is_cyclic_triangle_free(k3, {{0, 1, 0}}));
    CHECK(!is_cyclic_triangle_free(k3, {{1, 0, 1}}));
    CHECK_THROWS_AS(is_cyclic_triangle_free(k3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("count_completions respects the seed") {
    Graph k3 = Kn(3);
    int e01 = k3.edge_index(0, 1), e02 = k3.edge_index(0, 2), e12 = k3.edge_index(1, 2);
    PartialOrientation p = PartialOrientation::unset(k3);
    CHECK(count_completions(k3, p) == 6);
    p.state[e01] = EdgeState::Fwd;  // 0->1
    CHECK(count_completions(k3, p) == 3);
    p.state[e12] = EdgeState::Fwd;  // 1->2: closing edge forced transitive
    CHECK(count_completions(k3, p) == 1);
    p.state[e02] = EdgeState::Bwd;  // 2->0 closes the cycle
    CHECK(count_completions(k3, p) == 0);
}

TEST_CASE("propagation forces the transitive closing edge") {
    Graph k3 = Kn(3);
    int e01 = k3.edge_index(0, 1), e02 = k3.edge_index(0, 2), e12 = k3.edge_index(1, 2);
    PartialOrientation p = PartialOrientation::unset(k3);
    p.state[e01] = EdgeState::Fwd;  // 0->1
    p.state[e12] = EdgeState::Fwd;  // 1->2
    PropagateResult r = propagate(k3, p);
    REQUIRE(r.consistent);
    CHECK(r.forced == std::vector<int>{e02});
    CHECK(r.fixed.state[e02] == EdgeState::Fwd);  // 0->2
    CHECK(r.fixed.complete());

    p.state[e02] = EdgeState::Bwd;
    CHECK(!propagate(k3, p).consistent);

    // no two-set triangle: nothing fires
    PartialOrientation q = PartialOrientation::unset(k3);
    q.state[e01] = EdgeState::Fwd;
    PropagateResult r2 = propagate(k3, q);
    CHECK(r2.consistent);
    CHECK(r2.forced.empty());
}

TEST_CASE("propagation cascades through shared edges") {
    // K_4 minus {2,3}: fixing the triangle 0,1,2 path and 1->3 forces both
    // closing edges through the shared edge 0-1
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    PartialOrientation p = PartialOrientation::unset(g);
    p.state[g.edge_index(0, 1)] = EdgeState::Fwd;
    p.state[g.edge_index(1, 2)] = EdgeState::Fwd;
    p.state[g.edge_index(1, 3)] = EdgeState::Fwd;
    PropagateResult r = propagate(g, p);
    REQUIRE(r.consistent);
    CHECK(r.fixed.state[g.edge_index(0, 2)] == EdgeState::Fwd);
    CHECK(r.fixed.state[g.edge_index(0, 3)] == EdgeState::Fwd);
    CHECK(r.forced.size() == 2);
}

TEST_CASE("enumeration is exact, ordered, and cyclic-free") {
    Graph g = complete_multipartite({1, 2, 2});
    std::vector<std::vector<std::uint8_t>> seen;
    Count visits = enumerate_orientations(g, [&](const Orientation& o) {
        CHECK(is_cyclic_triangle_free(g, o));
        seen.push_back(o.dir);
    });
    CHECK(visits == 82);
    CHECK(seen.size() == 82);
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
    CHECK(enumerate_orientations(Kn(3), nullptr) == 6);
}

TEST_CASE("counting a disjoint union multiplies") {
    // K_3 plus K_4 sharing no vertex
    Graph g(7, {{0, 1}, {0, 2}, {1, 2},
                {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(count_orientations(g) == 6 * 24);
}
