#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orient/extension.hpp"
#include "orient/graph.hpp"

using namespace orient;

namespace {
Graph Kn(int n) { return complete_multipartite(std::vector<int>(n, 1)); }

VertexSet vs(std::initializer_list<int> vs_) {
    VertexSet m = 0;
    for (int v : vs_) m |= vs_single(v);
    return m;
}
}

TEST_CASE("ext of the two K_2s of K_4 minus an edge is 5") {
    // missing edge 2-3: A and B are the disjoint K_2s {0,2} and {1,3}
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    ExtResult r = ext({g, vs({0, 2}), vs({1, 3})});
    CHECK(r.value == 5);
    // witness sets exactly the two within-part edges
    int set_edges = 0;
    for (auto s : r.witness.state)
        if (s != EdgeState::Unset) ++set_edges;
    CHECK(set_edges == 2);
    CHECK(r.witness.state[g.edge_index(0, 2)] != EdgeState::Unset);
    CHECK(r.witness.state[g.edge_index(1, 3)] != EdgeState::Unset);
    CHECK(compatible_count(g, r.witness) == r.value);
}

TEST_CASE("no cross edges gives ext 1") {
    Graph g(4, {{0, 1}, {2, 3}});
    Graph h(4, {{0, 1}});
    CHECK(ext({g, vs({0, 1}), vs({2, 3})}).value == 1);
    CHECK(ext({h, vs({0, 1}), vs({2, 3})}).value == 1);
}

TEST_CASE("vertex against K_5 with 4 neighbors attains d+1 = 5") {
    Graph g = Kn(6);
    Graph g4(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                 {1, 2}, {1, 3}, {1, 4}, {1, 5},
                 {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    // vertex 0 sees 4 of the 5 clique vertices {1..5}
    CHECK(ext({g4, vs({0}), vs({1, 2, 3, 4, 5})}).value == 5);
    // full visibility: d+1 = 6
    CHECK(ext({g, vs({0}), vs({1, 2, 3, 4, 5})}).value == 6);
}

TEST_CASE("ext validation and guards") {
    Graph g = Kn(4);
    CHECK_THROWS_AS(ext({g, vs({0, 1}), vs({1, 2})}), std::invalid_argument);
    CHECK_THROWS_AS(ext({g, 0, vs({1})}), std::invalid_argument);
    CHECK_THROWS_AS(ext({g, vs({0}), 0}), std::invalid_argument);
    CHECK_THROWS_AS(ext({Kn(4), vs({0, 1, 2, 3}), vs_single(4)}),
                    std::invalid_argument);
    // 64 cross edges blow the 30-edge guard
    CHECK_THROWS_AS(ext({complete_multipartite({8, 8}), vs_full(8),
                         vs_full(16) & ~vs_full(8)}),
                    std::invalid_argument);
}

TEST_CASE("ext is local to A union B") {
    // same A,B embedded in a larger host with extra structure elsewhere
    Graph small(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Graph padded(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                     {4, 5}, {4, 6}, {5, 6}});
    Count a = ext({small, vs({0, 2}), vs({1, 3})}).value;
    Count b = ext({padded, vs({0, 2}), vs({1, 3})}).value;
    CHECK(a == b);
}

TEST_CASE("ext bounded by 1 and 2^cross") {
    Graph g = complete_multipartite({1, 2, 2});
    for (VertexSet a = 1; a < vs_full(5); ++a) {
        VertexSet rest = vs_full(5) & ~a;
        for (VertexSet b = rest; b; b = (b - 1) & rest) {
            Count v = ext({g, a, b}).value;
            auto cross = edges_between(g, a, b);
            CHECK(v >= 1);
            CHECK(v <= pow2(cross.size()));
        }
    }
}

TEST_CASE("compatible_count rejects a cyclic seed") {
    Graph k3 = Kn(3);
    PartialOrientation p = PartialOrientation::unset(k3);
    // edge order (0,1), (0,2), (1,2): 0->1, 2->0, 1->2 is the 3-cycle
    p.state = {EdgeState::Fwd, EdgeState::Bwd, EdgeState::Fwd};
    CHECK_THROWS_AS(compatible_count(k3, p), std::invalid_argument);
    p.state = {EdgeState::Fwd, EdgeState::Fwd, EdgeState::Fwd};
    CHECK(compatible_count(k3, p) == 1);
    p.state = {EdgeState::Fwd, EdgeState::Unset, EdgeState::Unset};
    CHECK(compatible_count(k3, p) == 3);
}

TEST_CASE("transitive ordering of an oriented clique") {
    Graph k4 = Kn(4);
    // all edges lower-to-higher: order is 0,1,2,3
    Orientation o{std::vector<std::uint8_t>(6, 0)};
    CHECK(transitive_ordering(k4, o) == std::vector<int>{0, 1, 2, 3});
    // reverse everything: order flips
    Orientation r{std::vector<std::uint8_t>(6, 1)};
    CHECK(transitive_ordering(k4, r) == std::vector<int>{3, 2, 1, 0});
    // cyclic triangle rejected
    Orientation bad{{0, 1, 0}};
    CHECK_THROWS_AS(transitive_ordering(Kn(3), bad), std::invalid_argument);
    // non-complete host rejected
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(transitive_ordering(p3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("section-2 certification families all pass") {
    int certs = 0;
    auto summaries = certify_section2([&](const Certificate& c) {
        CHECK(c.pass);
        ++certs;
    });
    REQUIRE(summaries.size() == 7);
    Count k2k2_max = 0;
    for (const auto& f : summaries) {
        CHECK(f.pass);
        CHECK(f.configs > 0);
        if (f.claim_id == "K2-K2") k2k2_max = f.max_attained;
        if (f.claim_id == "vertex-clique") CHECK(f.max_attained == 7);
    }
    CHECK(k2k2_max == 5);
    int total = 0;
    for (const auto& f : summaries) total += f.configs;
    CHECK(certs == total);
}
