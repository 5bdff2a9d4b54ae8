#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orient/count.hpp"
#include "orient/graph.hpp"

namespace orient {

// One direction bit per edge of a Graph, in edge-list order.
// 0 = from the lower-labeled endpoint to the higher, 1 = reverse.
struct Orientation {
    std::vector<std::uint8_t> dir;
};

enum class EdgeState : std::uint8_t { Unset = 2, Fwd = 0, Bwd = 1 };

// Search state: per-edge direction, possibly undecided.
struct PartialOrientation {
    std::vector<EdgeState> state;

    static PartialOrientation unset(const Graph& g) {
        return {std::vector<EdgeState>(g.edge_count(), EdgeState::Unset)};
    }
    bool complete() const {
        for (auto s : state)
            if (s == EdgeState::Unset) return false;
        return true;
    }
};

// True iff no triangle of g is oriented as a directed 3-cycle under o.
bool is_cyclic_triangle_free(const Graph& g, const Orientation& o);

// Ground-truth oracle: tests all 2^m direction bitmaps. Refuses m > 30.
Count oracle_count(const Graph& g);

// Exact count of cyclic-triangle-free orientations, DFS with triangle unit
// propagation. Agrees with oracle_count wherever the oracle applies.
Count count_orientations(const Graph& g);

// Same engine, seeded with a partial assignment: counts the completions of
// p that avoid the cyclic triangle. Returns 0 if p already contains one.
Count count_completions(const Graph& g, const PartialOrientation& p);

// Calls visitor on every cyclic-triangle-free orientation exactly once, in
// lexicographic order of the edge-direction vector. Returns the visit count.
Count enumerate_orientations(const Graph& g,
                             const std::function<void(const Orientation&)>& visitor);

struct PropagateResult {
    bool consistent = true;
    PartialOrientation fixed;     // fixed point reached (meaningless on contradiction)
    std::vector<int> forced;      // edges assigned by propagation, in firing order
};

// Triangle rule to fixpoint: two set edges of a triangle forming a directed
// path force the closing edge transitive; a cyclic triangle or a doubly
// forced edge is a contradiction (reported, not thrown).
PropagateResult propagate(const Graph& g, const PartialOrientation& p);

}  // namespace orient
