#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orient/count.hpp"
#include "orient/graph.hpp"

namespace orient {

// Lexicographically smallest upper-triangle adjacency bitstring over all
// vertex relabelings, packed into a 64-bit word (graph6 column order,
// first bit most significant). Two graphs on the same n are isomorphic
// iff their canonical forms are equal.
using CanonicalForm = std::uint64_t;

CanonicalForm canonical_form(const Graph& g);  // guard: n <= 10

Graph graph_from_form(CanonicalForm form, int n);

// One representative per isomorphism class on n vertices, built by
// augmenting the (n-1)-vertex classes and deduplicating by canonical
// form; emitted in canonical-form order. 1 <= n <= 8.
std::vector<Graph> generate_all(int n);

std::vector<Graph> filtered_classes(int n, const std::function<bool(const Graph&)>& pred);

struct MaximizerReport {
    int n = 0;
    Count max_count;
    std::vector<CanonicalForm> maximizers;
    int classes_counted = 0;
    int classes_pruned = 0;
};

// Runs count_orientations over every class on n vertices. With prune on,
// classes whose 2^m upper bound cannot beat the running max are skipped
// (they can still tie only when triangle-free with 2^m == max, so ties
// are never lost: skipping needs 2^m strictly below the running max).
MaximizerReport find_maximizers(int n, bool prune = true, int workers = 1);

struct TheoremReport {
    int n = 0;
    Count max_count;
    Count expected;  // max(2^{floor(n^2/4)}, n!)
    bool pass = false;
    bool unique_k44 = false;  // n = 8 only: K_{4,4} is the sole maximizer
    std::vector<CanonicalForm> maximizers;
};

TheoremReport verify_theorem(int n, bool prune = true, int workers = 1);

}  // namespace orient
