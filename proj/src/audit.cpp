#include "orient/audit.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/closed_forms.hpp"
#include "orient/enumerate.hpp"
#include "orient/graph.hpp"
#include "orient/orientation.hpp"

namespace orient {

namespace {

long fq(long k) { return k * k / 4; }  // floor(k^2/4), k >= 0

bool eval(const std::string& rel, const Rational& lhs, const Rational& rhs) {
    if (rel == "<") return lhs < rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == "=") return lhs == rhs;
    if (rel == ">") return lhs > rhs;
    throw std::invalid_argument("unknown relation " + rel);
}

struct Sink {
    std::vector<InequalityInstance>& out;
    void add(std::string id, std::string params, Rational lhs, Rational rhs,
             std::string rel, bool bearing = true, std::string note = "") {
        bool pass = eval(rel, lhs, rhs);
        out.push_back({std::move(id), std::move(params), std::move(lhs), std::move(rhs),
                       std::move(rel), pass, bearing, std::move(note)});
    }
};

// o(G) <= o(K_8) * 9^{n-8} * o(G - K_8); valid use needs n-8 >= 8, the
// displayed line only needs n-8 >= 1. Both domains are swept.
void audit_grandever1(Sink& s, int max_n) {
    for (int n = 9; n <= max_n; ++n) {
        Count lhs = pow2(16) * ipow(9, n - 8) * pow2(fq(n - 8));
        bool induction_domain = n - 8 >= 8;
        s.add("grandever1", "n=" + std::to_string(n), lhs, pow2(fq(n)), "<",
              induction_domain,
              induction_domain ? "" : "domain n-8 >= 1 only; induction needs n >= 16");
    }
}

// r! * r^{n-r} * 2^{floor((n-r)^2/4)} < 2^{floor(n^2/4)}. The proof applies
// this only when the induction hypothesis covers G - K, i.e. n - r >= 8;
// the text's wider "n >= 9" claim is swept for the record and is false at
// (r, n) = (5, 9).
void audit_grandever2(Sink& s, int max_n) {
    Count rfact[] = {0, 1, 2, 6, 24, 120, 720, 5040};
    for (int r = 5; r <= 7; ++r)
        for (int n = 9; n <= max_n; ++n) {
            Count lhs = rfact[r] * ipow(r, n - r) * pow2(fq(n - r));
            bool induction_domain = n - r >= 8;
            s.add("grandever2", "r=" + std::to_string(r) + " n=" + std::to_string(n),
                  lhs, pow2(fq(n)), "<", induction_domain,
                  induction_domain
                      ? ""
                      : "outside induction domain n >= r+8; the bound is often "
                        "stated for all n >= 9 but fails at (r,n)=(5,9)");
        }
}

// floor((n-1)^2/4) + d < floor(n^2/4) whenever d < (n-1)/2: the numeric
// content of the minimum-degree deletion step.
void audit_grandever3(Sink& s, int max_n) {
    for (int n = 9; n <= max_n; ++n)
        for (long d = 0; 2 * d < n - 1; ++d)
            s.add("grandever3", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                  pow2(fq(n - 1) + d), pow2(fq(n)), "<");
}

void audit_grandever4(Sink& s, int max_n) {
    for (int n = 11; n <= max_n; ++n)
        for (int y = 2; 2 * y <= n - 4; ++y) {
            Count lhs = Count(24) * ipow(13, y) * ipow(4, n - 4 - 2 * y) * pow2(fq(n - 4));
            s.add("grandever4", "n=" + std::to_string(n) + " y=" + std::to_string(y),
                  lhs, pow2(fq(n)), "<");
        }
}

// 1.1x^2 - 2.5x - 0.4xz + z^2 - 1 > 0 scaled by 10 into integers,
// on (i) x >= 3, z >= 0 and (ii) x in {1,2}, z >= 2.
void audit_grandever5(Sink& s, int max_n) {
    auto poly = [](long x, long z) {
        return Count(11) * x * x - 25 * x - 4 * x * z + 10 * z * z - 10;
    };
    for (long x = 1; x <= max_n; ++x)
        for (long z = 0; z <= max_n; ++z) {
            bool in_domain = x >= 3 || z >= 2;
            if (in_domain)
                s.add("grandever5", "x=" + std::to_string(x) + " z=" + std::to_string(z),
                      poly(x, z), 0, ">");
        }
    // gating demonstration: just outside the claimed domain the polynomial
    // really is negative, so the domain split matters
    s.add("grandever5-outside", "x=1 z=1", poly(1, 1), 0, ">", false,
          "outside claimed domain, where the polynomial really is negative; "
          "recorded to show the domain split is load-bearing");
}

// 2^{16+4z} * 2^{(8+z)(y-1)} * 4^{C(y-1,2)} * 2^{y-1} is exactly
// 2^{((6+2y+z)^2 - z)/4} = 2^{floor(n^2/4)} for z in {0,1} (uses z^2 = z);
// strictness of the surrounding step comes from o(H) < 2^{16+4z}.
void audit_grandever6(Sink& s, int max_n) {
    for (int z = 0; z <= 1; ++z)
        for (int y = 1; 6 + 2 * y + z <= 2 * max_n; ++y) {
            long n = 6 + 2L * y + z;
            long e_lhs = 16 + 4L * z + (8L + z) * (y - 1) + (y - 1L) * (y - 2) + (y - 1);
            long e_mid = (n * n - z) / 4;
            s.add("grandever6", "y=" + std::to_string(y) + " z=" + std::to_string(z),
                  pow2(e_lhs), pow2(e_mid), "=");
            s.add("grandever6-floor", "y=" + std::to_string(y) + " z=" + std::to_string(z),
                  pow2(e_mid), pow2(fq(n)), "=",
                  true, "((6+2y+z)^2 - z)/4 equals floor(n^2/4) for z in {0,1}");
        }
}

// 2^12 * 128^{y-2} * 2^{(2y-4)^2/4} * (3*2^y)^z against 2^{floor(n^2/4)},
// n = 3+2y+z. For z = 0 the two sides are exactly equal, so the audited
// relation is <=; strictness of the full step comes from o(H) < 2^12.
void audit_grandever8(Sink& s, int max_n) {
    for (int z = 0; z <= 1; ++z)
        for (int y = 2; 3 + 2 * y + z <= 2 * max_n; ++y) {
            long n = 3 + 2L * y + z;
            Count lhs = pow2(12) * ipow(128, y - 2) * pow2((y - 2L) * (y - 2)) *
                        ipow(Count(3) * pow2(y), z);
            Count rhs = pow2(fq(n));
            s.add("grandever8", "y=" + std::to_string(y) + " z=" + std::to_string(z),
                  lhs, rhs, "<=",
                  true, lhs == rhs ? "equality at z=0; strictness from o(H) < 2^12" : "");
            // the intermediate bound 2^{((3+2y+z)^2-1)/4}, compared via
            // 4th powers to keep the z=1 quarter-exponent exact
            s.add("grandever8-mid",
                  "y=" + std::to_string(y) + " z=" + std::to_string(z),
                  ipow(lhs, 4), pow2(n * n - 1), "<=");
        }
}

// appendix ledger
void audit_ver(Sink& s) {
    for (int n = 9; n <= 15; ++n)
        s.add("ver0", "n=" + std::to_string(n),
              factorial(n - 8) * ipow(9, n - 8) * pow2(16), pow2(fq(n)), "<");
    for (int r = 6; r <= 7; ++r)
        for (int n = 9; n <= 7 + r; ++n)
            s.add("ver1", "r=" + std::to_string(r) + " n=" + std::to_string(n),
                  factorial(n - r) * ipow(r, n - r) * factorial(r), pow2(fq(n)), "<");
    for (int n = 9; n <= 12; ++n)
        for (int x = 2; 2 * x <= n - 5; ++x)
            s.add("ver2", "n=" + std::to_string(n) + " x=" + std::to_string(x),
                  factorial(n - 5) * ipow(19, x) * ipow(5, n - 5 - 2 * x) * 120,
                  pow2(fq(n)), "<");
    for (int n = 9; n <= 12; ++n)
        for (int x = 0; x <= 1; ++x)
            s.add("ver3", "n=" + std::to_string(n) + " x=" + std::to_string(x),
                  Count(120) * ipow(19, x) * ipow(5, n - 5 - 2 * x) * pow2(n - 6),
                  pow2(fq(n)), "<");
    // The x = 1 rows hold as displayed. The x = 0 rows do not: the (n-8)!
    // factor over-counts a graph whose matching number is 0, i.e. an
    // edgeless one with exactly 1 orientation (the chain is even reversed
    // at n = 11). Recorded as stated for the record; the verdict-bearing
    // rows use the exact factor 1 for x = 0, with relation <= because the
    // strictness of the chain comes from the preceding o(G[W u K]) < 2^16.
    for (int n = 9; n <= 11; ++n)
        for (int x = 0; x <= 1 && 2 * x <= n - 8; ++x) {
            Count stated =
                factorial(n - 8) * ipow(169, x) * ipow(16, n - 8 - 2 * x) * pow2(16);
            if (x == 0) {
                s.add("ver4", "n=" + std::to_string(n) + " x=0", stated, pow2(fq(n)),
                      "<", false,
                      "as displayed; erratum: matching number 0 makes the (n-8)! "
                      "factor vacuous, the edgeless remainder has 1 orientation");
                s.add("ver4-fixed", "n=" + std::to_string(n) + " x=0",
                      ipow(16, n - 8) * pow2(16), pow2(fq(n)), "<=",
                      true, "strictness of the chain from o(G[W u K]) < 2^16");
            } else {
                s.add("ver4", "n=" + std::to_string(n) + " x=" + std::to_string(x),
                      stated, pow2(fq(n)), "<");
            }
        }
    s.add("ver5", "n=10", Count(6) * 15 * 52 * 5040, pow2(25), "<");
    s.add("ver5", "n=11", Count(6) * 36 * 15 * 52 * 5040, pow2(30), "<");
    for (int n = 9; n <= 11; ++n)
        for (int x = 0; 2 * x <= n - 7; ++x) {
            long rest = n - 7 - 2L * x;
            Count lhs = pow2(x) * ipow(4, x * (x - 1L) / 2) * ipow(13, x) * ipow(8, x) *
                        ipow(3, rest) * ipow(4, rest) * pow2(x * rest) * 5040;
            s.add("ver6", "n=" + std::to_string(n) + " x=" + std::to_string(x), lhs,
                  pow2(fq(n)), "<");
        }
    for (int n = 9; n <= 11; ++n)
        for (int x = 0; 2 * x <= n - 4; ++x) {
            long rest = n - 4 - 2L * x;
            Count lhs = pow2(x) * ipow(4, x * (x - 1L) / 2) * ipow(13, x) *
                        ipow(4, rest) * pow2(x * rest) * 24;
            s.add("ver7", "n=" + std::to_string(n) + " x=" + std::to_string(x), lhs,
                  pow2(fq(n)), "<");
        }
    for (int n = 9; n <= 10; ++n) {
        int y = n - 9;
        s.add("ver8", "n=" + std::to_string(n),
              ipow(6, 3) * ipow(15, 3) * ipow(3, 3 * y), pow2(fq(n)), "<");
    }
    s.add("ver9", "", Count(3) * 4, pow2(4), "<");
    s.add("ver10a", "", Count(82) * 18 * 15 * 3 * 3 * 5, pow2(20), "<");
    // the count of K_{1,4,4}: the closed form, the propagation engine and
    // the 2^24 brute-force oracle all give 271618 (the often-quoted 271614
    // is an arithmetic slip); the inequality holds either way
    s.add("ver10b", "", Count(271618), pow2(20), "<");
    s.add("ver11", "", Count(3) * 8, pow2(5), "<");
    s.add("ver12", "", Count(82) * 82 * 15 * 64 * 4, pow2(25), "<");
}

// Mantel at desk scale: every triangle-free class on n <= 7 vertices other
// than the balanced complete bipartite graph has fewer than floor(n^2/4)
// edges, so 2^{|E|} < 2^{floor(n^2/4)}. Covers the r = 2 cases
// (grandever9 / ver13), where the count equals 2^{|E|}.
void audit_mantel_small(Sink& s) {
    for (int n = 3; n <= 7; ++n) {
        CanonicalForm balanced =
            canonical_form(complete_multipartite({n / 2, (n + 1) / 2}));
        for (const Graph& g : generate_all(n)) {
            if (!triangles_of(g).empty()) continue;
            if (canonical_form(g) == balanced) continue;
            s.add("ver13", "n=" + std::to_string(n) + " g=" + emit_graph6(g),
                  pow2(g.edge_count()), pow2(fq(n)), "<",
                  true, "also certifies grandever9 at desk scale");
        }
    }
}

}  // namespace

std::vector<InequalityInstance> audit_all(const AuditConfig& cfg) {
    std::vector<InequalityInstance> out;
    Sink s{out};
    audit_grandever1(s, cfg.max_n);
    audit_grandever2(s, cfg.max_n);
    audit_grandever3(s, cfg.max_n);
    audit_grandever4(s, cfg.max_n);
    audit_grandever5(s, cfg.max_n);
    audit_grandever6(s, cfg.max_n);
    audit_grandever8(s, cfg.max_n);
    audit_ver(s);
    audit_mantel_small(s);
    return out;
}

bool audit_passed(const std::vector<InequalityInstance>& instances) {
    for (const auto& i : instances)
        if (i.verdict_bearing && !i.pass) return false;
    return true;
}

LemmaClaimReport verify_lemma_claim() {
    LemmaClaimReport rep;
    rep.max_count = 0;
    for (const Graph& g : generate_all(7)) {
        ++rep.classes_scanned;
        if (clique_number(g) >= 4) continue;
        auto tris = triangles_of(g);
        if (tris.empty()) continue;

        // two vertex-disjoint triangles disqualify
        bool disjoint_tris = false;
        for (std::size_t i = 0; i < tris.size() && !disjoint_tris; ++i)
            for (std::size_t j = i + 1; j < tris.size(); ++j) {
                VertexSet ti = vs_single(tris[i][0]) | vs_single(tris[i][1]) |
                               vs_single(tris[i][2]);
                VertexSet tj = vs_single(tris[j][0]) | vs_single(tris[j][1]) |
                               vs_single(tris[j][2]);
                if ((ti & tj) == 0) {
                    disjoint_tris = true;
                    break;
                }
            }
        if (disjoint_tris) continue;

        // does this triangle admit a 2-edge matching on the other 4 vertices?
        auto has_matching_avoiding = [&](const std::array<int, 3>& t) {
            VertexSet tv = vs_single(t[0]) | vs_single(t[1]) | vs_single(t[2]);
            const auto& es = g.edges();
            for (std::size_t i = 0; i < es.size(); ++i) {
                auto [a, b] = es[i];
                if (vs_contains(tv, a) || vs_contains(tv, b)) continue;
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    auto [c, d] = es[j];
                    if (vs_contains(tv, c) || vs_contains(tv, d)) continue;
                    if (c == a || c == b || d == a || d == b) continue;
                    return true;
                }
            }
            return false;
        };
        bool exists = false, forall = true;
        for (const auto& t : tris) {
            if (has_matching_avoiding(t))
                exists = true;
            else
                forall = false;
        }
        if (!exists) continue;

        Count c = count_orientations(g);
        ++rep.qualifying;
        if (forall) ++rep.qualifying_universal;
        if (c > rep.max_count) rep.max_count = c;
        rep.entries.push_back({emit_graph6(g), c, forall});
    }
    rep.pass = rep.qualifying > 0 && rep.max_count < pow2(12);
    return rep;
}

namespace {

// exact rational upper bound on log2(base), verified by integer powering
Rational log2_upper(long base, long num, long den) {
    if (pow2(num) < ipow(base, den))
        throw std::logic_error("log2 bound fails verification");
    return Rational(num, den);
}

// smallest integer n >= start with a*n + b > 0 for a > 0 (linear gap)
long linear_crossover(const Rational& a, const Rational& b, long start) {
    long n = start;
    while (a * n + b <= 0) ++n;
    return n;
}

}  // namespace

DominanceCertificate exponent_dominance(const std::string& case_id) {
    DominanceCertificate cert;
    cert.id = case_id;
    if (case_id == "grandever1") {
        // gap(n) >= (n^2-1)/4 - (n-8)^2/4 - 16 - (n-8)*log2(9)
        //         = (4 - L9) n + (-65/4 - 16 + 8 L9)
        Rational L9 = log2_upper(9, 317, 100);
        Rational a = Rational(4) - L9;
        Rational b = Rational(-65, 4) - 16 + 8 * L9;
        cert.pass = a > 0;
        cert.crossover = linear_crossover(a, b, 9);
        cert.note = "linear gap with slope 4 - log2(9); log2(9) <= 317/100 verified "
                    "by 2^317 >= 9^100";
    } else if (case_id == "grandever2") {
        struct {
            int r;
            long fact_num;
        } cases[] = {{5, 691}, {6, 950}, {7, 1230}};
        long lnum[] = {0, 0, 0, 0, 0, 233, 260, 281};
        cert.pass = true;
        cert.crossover = 0;
        for (auto [r, fn] : cases) {
            Rational Lr = log2_upper(r, lnum[r], 100);
            // log2(r!) bound, verified directly
            Count rfact = 1;
            for (int i = 2; i <= r; ++i) rfact *= i;
            if (pow2(fn) < ipow(rfact, 100))
                throw std::logic_error("log2(r!) bound fails verification");
            Rational Lf(fn, 100);
            // gap(n) = (2rn - r^2 - 1)/4 - Lf - (n - r) Lr
            Rational a = Rational(r, 2) - Lr;
            Rational b = Rational(-(r * r + 1), 4) - Lf + r * Lr;
            if (a <= 0) cert.pass = false;
            cert.crossover = std::max(cert.crossover, linear_crossover(a, b, 9));
        }
        cert.note = "per r in {5,6,7}: linear gap with slope r/2 - log2(r); rational "
                    "log bounds verified by integer powering";
    } else if (case_id == "grandever4") {
        // same-parity telescoping makes the claim n-independent:
        // floor(n^2/4) - floor((n-4)^2/4) = 2n-4, so the inequality is
        // equivalent to 3*13^y < 2*16^y, monotone since 13 < 16.
        bool floors_ok = true;
        for (long n = 9; n <= 400; ++n)
            if (fq(n) - fq(n - 4) != 2 * n - 4) floors_ok = false;
        bool base = Count(3) * 13 * 13 < Count(2) * 16 * 16;
        cert.pass = floors_ok && base;
        cert.crossover = 11;
        // a common justification of this step, 3*(13/16)^2 <= 2^{3/4}, is
        // actually false (4th powers: 81*13^8 > 8*16^8); the floored
        // telescoping above is what carries the case
        bool quoted_side_claim =
            Count(81) * ipow(13, 8) <= Count(8) * ipow(16, 8);
        cert.note = std::string("reduces to 3*13^y < 2*16^y for y >= 2, verified at "
                                "y=2 and monotone; the quoted side claim "
                                "3*(13/16)^2 <= 2^(3/4) is ") +
                    (quoted_side_claim ? "true" : "false (erratum, harmless: the "
                                                  "floored exponent identity closes "
                                                  "the step)");
    } else {
        throw std::invalid_argument("no dominance certificate for " + case_id);
    }
    return cert;
}

}  // namespace orient
