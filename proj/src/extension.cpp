#include "orient/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/closed_forms.hpp"

namespace orient {

Count compatible_count(const Graph& g, const PartialOrientation& t) {
    if (static_cast<int>(t.state.size()) != g.edge_count())
        throw std::invalid_argument("compatible_count: orientation size mismatch");
    for (auto [a, b, c] : triangles_of(g)) {
        EdgeState sab = t.state[g.edge_index(a, b)];
        EdgeState sbc = t.state[g.edge_index(b, c)];
        EdgeState sac = t.state[g.edge_index(a, c)];
        if (sab == EdgeState::Unset || sbc == EdgeState::Unset || sac == EdgeState::Unset)
            continue;
        bool pab = sab == EdgeState::Fwd, pbc = sbc == EdgeState::Fwd,
             pac = sac == EdgeState::Fwd;
        if (pab == pbc && pac != pab)
            throw std::invalid_argument("compatible_count: t contains a cyclic triangle");
    }
    return count_completions(g, t);
}

ExtResult ext(const ExtConfig& cfg) {
    VertexSet all = vs_full(cfg.g.vertex_count());
    if ((cfg.a & cfg.b) != 0) throw std::invalid_argument("ext: A and B overlap");
    if (cfg.a == 0 || cfg.b == 0) throw std::invalid_argument("ext: A and B must be nonempty");
    if ((cfg.a | cfg.b) & ~all) throw std::invalid_argument("ext: vertex out of range");

    // ext only depends on G[A ∪ B]
    auto [h, map] = induced_subgraph(cfg.g, cfg.a | cfg.b);
    VertexSet ah = 0, bh = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (vs_contains(cfg.a, map[i])) ah |= vs_single(static_cast<int>(i));
        if (vs_contains(cfg.b, map[i])) bh |= vs_single(static_cast<int>(i));
    }

    std::vector<std::pair<int, int>> t_pairs;
    for (auto [u, v] : h.edges()) {
        bool in_a = vs_contains(ah, u) && vs_contains(ah, v);
        bool in_b = vs_contains(bh, u) && vs_contains(bh, v);
        if (in_a || in_b) t_pairs.emplace_back(u, v);
    }
    if (h.edge_count() > 30)
        throw std::invalid_argument("ext: size guard |E(T)| + |E(A,B)| <= 30 exceeded");

    Graph t_graph(h.vertex_count(), t_pairs);
    std::vector<int> t2h;
    for (auto [u, v] : t_graph.edges()) t2h.push_back(h.edge_index(u, v));

    ExtResult best;
    best.value = -1;
    PartialOrientation best_h;
    enumerate_orientations(t_graph, [&](const Orientation& to) {
        auto partial = PartialOrientation::unset(h);
        for (std::size_t k = 0; k < t2h.size(); ++k)
            partial.state[t2h[k]] = to.dir[k] ? EdgeState::Bwd : EdgeState::Fwd;
        Count c = count_completions(h, partial);
        if (c > best.value) {
            best.value = c;
            best_h = partial;
        }
    });

    best.witness = PartialOrientation::unset(cfg.g);
    for (std::size_t k = 0; k < t2h.size(); ++k) {
        auto [u, v] = h.edges()[t2h[k]];
        best.witness.state[cfg.g.edge_index(map[u], map[v])] = best_h.state[t2h[k]];
    }
    return best;
}

std::vector<int> transitive_ordering(const Graph& g, const Orientation& o) {
    int n = g.vertex_count();
    if (g.edge_count() != n * (n - 1) / 2)
        throw std::invalid_argument("transitive_ordering: graph is not a clique");
    if (static_cast<int>(o.dir.size()) != g.edge_count())
        throw std::invalid_argument("transitive_ordering: orientation size mismatch");
    std::vector<int> outdeg(n, 0);
    const auto& es = g.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        auto [u, v] = es[i];
        ++outdeg[o.dir[i] ? v : u];
    }
    std::vector<int> order(n, -1);
    for (int v = 0; v < n; ++v) {
        int pos = n - 1 - outdeg[v];
        if (pos < 0 || order[pos] != -1)
            throw std::invalid_argument("transitive_ordering: orientation is not transitive");
        order[pos] = v;
    }
    // out-degrees being a permutation of 0..n-1 already rules out directed
    // triangles in a tournament, but verify edge by edge anyway
    std::vector<int> rank(n);
    for (int p = 0; p < n; ++p) rank[order[p]] = p;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        auto [u, v] = es[i];
        int from = o.dir[i] ? v : u, to = o.dir[i] ? u : v;
        if (rank[from] >= rank[to])
            throw std::invalid_argument("transitive_ordering: orientation is not transitive");
    }
    return order;
}

namespace {

struct CertCtx {
    const std::function<void(const Certificate&)>& emit;
    std::vector<FamilySummary>& out;
    FamilySummary* cur = nullptr;

    void family(const std::string& id) {
        out.push_back({id, 0, Count(0), true});
        cur = &out.back();
    }
    void record(Certificate c) {
        ++cur->configs;
        if (c.attained > cur->max_attained) cur->max_attained = c.attained;
        if (!c.pass) cur->pass = false;
        if (emit) emit(c);
    }
};

std::vector<std::pair<int, int>> clique_pairs(int lo, int hi) {
    std::vector<std::pair<int, int>> ps;
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v) ps.emplace_back(u, v);
    return ps;
}

// (a) v against K_r: ext equals d+1 exactly, all r <= 6, all neighbor sets
void certify_vertex_clique(CertCtx& ctx) {
    ctx.family("vertex-clique");
    for (int r = 1; r <= 6; ++r) {
        for (VertexSet nb = 0; nb < (VertexSet{1} << r); ++nb) {
            auto pairs = clique_pairs(0, r);
            for (int w = 0; w < r; ++w)
                if (vs_contains(nb, w)) pairs.emplace_back(w, r);
            Graph host(r + 1, pairs);
            ExtResult res = ext({host, vs_single(r), vs_full(r)});
            Count bound = vs_size(nb) + 1;
            ctx.record({"vertex-clique", emit_graph6(host), vs_single(r), vs_full(r),
                        res.value, bound, res.value == bound, ""});
        }
    }
}

// (b) edge {u,v} against K_r with a common neighbor, r in {3,4,5}
void certify_edge_kr(CertCtx& ctx) {
    ctx.family("edge-Kr");
    for (int r = 3; r <= 5; ++r) {
        for (VertexSet nu = 0; nu < (VertexSet{1} << r); ++nu)
            for (VertexSet nv = 0; nv < (VertexSet{1} << r); ++nv) {
                if ((nu & nv) == 0) continue;  // hypothesis d_A(u,v) != 0
                auto pairs = clique_pairs(0, r);
                pairs.emplace_back(r, r + 1);
                for (int w = 0; w < r; ++w) {
                    if (vs_contains(nu, w)) pairs.emplace_back(w, r);
                    if (vs_contains(nv, w)) pairs.emplace_back(w, r + 1);
                }
                Graph host(r + 2, pairs);
                ExtResult res = ext({host, vs_full(r), vs_single(r) | vs_single(r + 1)});
                Count bound = edge_kr_bound(vs_size(nu), vs_size(nv), vs_size(nu & nv));
                ctx.record({"edge-Kr", emit_graph6(host), vs_full(r),
                            vs_single(r) | vs_single(r + 1), res.value, bound,
                            res.value <= bound, ""});
            }
    }
}

// (c) edge against K_r in a K_{r+1}-free host, r in {2,..,5}
void certify_cor_edge_kr(CertCtx& ctx) {
    ctx.family("cor-edge-Kr");
    for (int r = 2; r <= 5; ++r) {
        for (VertexSet nu = 0; nu < (VertexSet{1} << r); ++nu)
            for (VertexSet nv = 0; nv < (VertexSet{1} << r); ++nv) {
                auto pairs = clique_pairs(0, r);
                pairs.emplace_back(r, r + 1);
                for (int w = 0; w < r; ++w) {
                    if (vs_contains(nu, w)) pairs.emplace_back(w, r);
                    if (vs_contains(nv, w)) pairs.emplace_back(w, r + 1);
                }
                Graph host(r + 2, pairs);
                if (clique_number(host) > r) continue;
                ExtResult res = ext({host, vs_full(r), vs_single(r) | vs_single(r + 1)});
                Count bound = corollary_bound(r);
                ctx.record({"cor-edge-Kr", emit_graph6(host), vs_full(r),
                            vs_single(r) | vs_single(r + 1), res.value, bound,
                            res.value <= bound, ""});
            }
    }
}

// (d) two disjoint K_2 in a K_4-free host: ext <= 5
void certify_k2_k2(CertCtx& ctx) {
    ctx.family("K2-K2");
    const std::pair<int, int> cross[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    for (unsigned sub = 0; sub < 16; ++sub) {
        std::vector<std::pair<int, int>> pairs = {{0, 1}, {2, 3}};
        for (int k = 0; k < 4; ++k)
            if ((sub >> k) & 1) pairs.push_back(cross[k]);
        Graph host(4, pairs);
        if (clique_number(host) > 3) continue;
        ExtResult res = ext({host, 0b0011, 0b1100});
        ctx.record({"K2-K2", emit_graph6(host), 0b0011, 0b1100, res.value, Count(5),
                    res.value <= 5, ""});
    }
}

// (e) vertex against an induced K_4^- in a K_4-free host: ext <= 5
void certify_vertex_k4minus(CertCtx& ctx) {
    ctx.family("vertex-K4minus");
    for (VertexSet nb = 0; nb < 16; ++nb) {
        // K_4^- on {0,1,2,3} with {2,3} the missing edge
        std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
        for (int w = 0; w < 4; ++w)
            if (vs_contains(nb, w)) pairs.emplace_back(w, 4);
        Graph host(5, pairs);
        if (clique_number(host) > 3) continue;
        ExtResult res = ext({host, vs_single(4), 0b01111});
        ctx.record({"vertex-K4minus", emit_graph6(host), vs_single(4), 0b01111, res.value,
                    Count(5), res.value <= 5, ""});
    }
}

// (f) path abcde with chords {ac, bd, ce}: at most 8 compatible path
// orientations for any chord orientation, at most 7 when ac points to a
// and bd points to d
void certify_p5_square(CertCtx& ctx) {
    ctx.family("P5-square");
    Graph host(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 3}, {2, 4}});
    int e_ac = host.edge_index(0, 2), e_bd = host.edge_index(1, 3),
        e_ce = host.edge_index(2, 4);
    for (unsigned bits = 0; bits < 8; ++bits) {
        auto t = PartialOrientation::unset(host);
        t.state[e_ac] = (bits & 1) ? EdgeState::Bwd : EdgeState::Fwd;
        t.state[e_bd] = (bits & 2) ? EdgeState::Bwd : EdgeState::Fwd;
        t.state[e_ce] = (bits & 4) ? EdgeState::Bwd : EdgeState::Fwd;
        Count c = compatible_count(host, t);
        bool flagged = t.state[e_ac] == EdgeState::Bwd &&  // towards a
                       t.state[e_bd] == EdgeState::Fwd;    // towards d
        Count bound = flagged ? 7 : 8;
        std::string tb = std::string(1, '0' + (bits & 1)) +
                         std::string(1, '0' + ((bits >> 1) & 1)) +
                         std::string(1, '0' + ((bits >> 2) & 1));
        ctx.record({"P5-square", emit_graph6(host), 0, 0, c, bound, c <= bound,
                    "chords ac,bd,ce bits " + tb});
    }
}

// (g) two disjoint triangles in a K_4-free host: ext <= 15
void certify_k3_k3(CertCtx& ctx) {
    ctx.family("K3-K3");
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) cross.emplace_back(u, v);
    for (unsigned sub = 0; sub < (1u << 9); ++sub) {
        std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 2},
                                                  {3, 4}, {3, 5}, {4, 5}};
        for (int k = 0; k < 9; ++k)
            if ((sub >> k) & 1) pairs.push_back(cross[k]);
        Graph host(6, pairs);
        if (clique_number(host) > 3) continue;
        ExtResult res = ext({host, 0b000111, 0b111000});
        ctx.record({"K3-K3", emit_graph6(host), 0b000111, 0b111000, res.value, Count(15),
                    res.value <= 15, ""});
    }
}

}  // namespace

std::vector<FamilySummary> certify_section2(
    const std::function<void(const Certificate&)>& emit) {
    std::vector<FamilySummary> out;
    CertCtx ctx{emit, out};
    certify_vertex_clique(ctx);
    certify_edge_kr(ctx);
    certify_cor_edge_kr(ctx);
    certify_k2_k2(ctx);
    certify_vertex_k4minus(ctx);
    certify_p5_square(ctx);
    certify_k3_k3(ctx);
    return out;
}

}  // namespace orient
