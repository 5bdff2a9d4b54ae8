#pragma once

#include <string>
#include <vector>

#include "orient/count.hpp"

namespace orient {

struct AuditConfig {
    int max_n = 200;  // finite sweep bound for the unbounded-n inequalities
};

// One evaluated parameter assignment of one displayed inequality. Both
// sides are exact (integers embedded in rationals); no floating point
// touches a verdict anywhere in the auditor.
struct InequalityInstance {
    std::string id;
    std::string params;
    Rational lhs;
    Rational rhs;
    std::string relation;  // "<", "<=", "=", ">"
    bool pass = false;
    // Instances swept outside the domain the proof actually relies on are
    // reported for the record but carry no verdict weight.
    bool verdict_bearing = true;
    std::string note;
};

std::vector<InequalityInstance> audit_all(const AuditConfig& cfg = {});

// True iff every verdict-bearing instance passed.
bool audit_passed(const std::vector<InequalityInstance>& instances);

struct LemmaClaimEntry {
    std::string graph6;
    Count count;
    bool universal;  // also qualifies when the matching hypothesis is read universally
};

struct LemmaClaimReport {
    int classes_scanned = 0;
    int qualifying = 0;            // existential reading
    int qualifying_universal = 0;  // universal reading (always a subset)
    Count max_count;
    bool pass = false;  // every qualifying class counts below 2^12
    std::vector<LemmaClaimEntry> entries;
};

// Exhaustive check over all 7-vertex isomorphism classes: K_4-free, has a
// triangle T with a 2-edge matching disjoint from V(T), and no two
// vertex-disjoint triangles, implies fewer than 2^12 orientations.
LemmaClaimReport verify_lemma_claim();

struct DominanceCertificate {
    std::string id;
    bool pass = false;
    long crossover = 0;  // smallest n from which the gap stays positive
    std::string note;
};

// Rational certificate that the exponent gap of the given case is positive
// and increasing beyond the finite sweep, using exactly verified rational
// upper bounds on the binary logarithms involved.
DominanceCertificate exponent_dominance(const std::string& case_id);

}  // namespace orient
