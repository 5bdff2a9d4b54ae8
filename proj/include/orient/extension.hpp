#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orient/count.hpp"
#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

// Disjoint nonempty vertex sets A, B of a host graph; T = G[A] ∪ G[B].
struct ExtConfig {
    Graph g;
    VertexSet a = 0;
    VertexSet b = 0;
};

struct ExtResult {
    Count value;
    // Orientation of the edges of G[A] ∪ G[B] attaining the max, with the
    // cross edges left unset; indexed against cfg.g's edge list.
    // Lexicographically smallest maximizer.
    PartialOrientation witness;
};

// Number of orientations of the unset edges of t whose union with t is
// cyclic-triangle-free. Throws if t itself already contains a cyclic
// triangle among its set edges.
Count compatible_count(const Graph& g, const PartialOrientation& t);

// ext_G(A,B): max over cyclic-triangle-free orientations of G[A] ∪ G[B] of
// the number of compatible cross-edge orientations. Exhaustive; guarded to
// |E(T)| + |E_G(A,B)| <= 30.
ExtResult ext(const ExtConfig& cfg);

// Unique source-to-sink ordering of a transitively oriented clique.
// Throws if g is not complete or o contains a directed triangle.
std::vector<int> transitive_ordering(const Graph& g, const Orientation& o);

struct Certificate {
    std::string claim_id;
    std::string host_graph6;
    VertexSet a_mask = 0;
    VertexSet b_mask = 0;
    Count attained;
    Count bound;
    bool pass = false;
    std::string extra;  // e.g. the fixed chord orientation bits for the path claim
};

struct FamilySummary {
    std::string claim_id;
    int configs = 0;
    Count max_attained;
    bool pass = true;
};

// Exhaustively certifies the seven extension-bound claim families over
// their full small-host universes; emit (if given) receives one
// certificate per configuration in deterministic order.
std::vector<FamilySummary> certify_section2(
    const std::function<void(const Certificate&)>& emit = nullptr);

}  // namespace orient
