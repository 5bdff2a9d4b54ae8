#include "orient/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace orient {

namespace {

// Triangle a<b<c, edge indices in roles (ab, bc, ac). With p[role] meaning
// "oriented from lower to higher endpoint", the directed 3-cycles are
// exactly (1,1,0) and (0,0,1).
struct Tri {
    std::array<int, 3> e;
};

constexpr std::array<std::array<bool, 3>, 2> kCyclic = {{{true, true, false},
                                                         {false, false, true}}};

bool cyclic_pattern(bool pab, bool pbc, bool pac) {
    return pab == pbc && pac != pab;
}

std::vector<Tri> edge_triangles(const Graph& g) {
    std::vector<Tri> tris;
    for (auto [a, b, c] : triangles_of(g))
        tris.push_back({{g.edge_index(a, b), g.edge_index(b, c), g.edge_index(a, c)}});
    return tris;
}

class Engine {
public:
    explicit Engine(const Graph& g) : m_(g.edge_count()), tris_(edge_triangles(g)) {
        etris_.resize(m_);
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
            for (int role = 0; role < 3; ++role)
                etris_[tris_[t].e[role]].emplace_back(t, role);
        build_order();
    }

    // Counts cyclic-triangle-free completions of init.
    Count count(const PartialOrientation& init) {
        if (!seed(init)) return 0;
        return dfs();
    }

    // Runs the seed pass only (unit propagation to fixpoint).
    PropagateResult propagate_only(const PartialOrientation& init) {
        PropagateResult r;
        r.consistent = seed(init);
        if (r.consistent) {
            r.fixed.state = st_;
            for (int e : trail_)
                if (init.state[e] == EdgeState::Unset) r.forced.push_back(e);
        }
        return r;
    }

private:
    int m_;
    std::vector<Tri> tris_;
    std::vector<std::vector<std::pair<int, int>>> etris_;  // edge -> (tri, role)
    std::vector<int> order_;

    std::vector<EdgeState> st_;
    std::vector<int> unset_cnt_;  // per triangle
    int active_ = 0;              // triangles with >= 2 unset edges
    int total_unset_ = 0;
    std::vector<int> trail_;

    // Static branch order: each new edge closes as many triangles as
    // possible with already-ordered edges. Only edges lying in a triangle
    // take part; the rest are handled by the 2^k shortcut.
    void build_order() {
        std::vector<bool> in_tri(m_, false), used(m_, false);
        for (const auto& t : tris_)
            for (int e : t.e) in_tri[e] = true;
        int total = static_cast<int>(std::count(in_tri.begin(), in_tri.end(), true));
        for (int k = 0; k < total; ++k) {
            int best = -1, best_score = -1;
            for (int e = 0; e < m_; ++e) {
                if (!in_tri[e] || used[e]) continue;
                int score = 0;
                for (auto [t, role] : etris_[e]) {
                    int placed = 0;
                    for (int r = 0; r < 3; ++r)
                        if (r != role && used[tris_[t].e[r]]) ++placed;
                    if (placed == 2) ++score;
                }
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
            used[best] = true;
            order_.push_back(best);
        }
    }

    bool seed(const PartialOrientation& init) {
        if (static_cast<int>(init.state.size()) != m_)
            throw std::invalid_argument("partial orientation size mismatch");
        st_.assign(m_, EdgeState::Unset);
        unset_cnt_.assign(tris_.size(), 3);
        active_ = static_cast<int>(tris_.size());
        total_unset_ = m_;
        trail_.clear();
        for (int e = 0; e < m_; ++e)
            if (init.state[e] != EdgeState::Unset)
                if (!assign(e, init.state[e])) return false;
        return true;
    }

    bool assign(int e0, EdgeState d0) {
        std::vector<std::pair<int, EdgeState>> queue{{e0, d0}};
        while (!queue.empty()) {
            auto [e, d] = queue.back();
            queue.pop_back();
            if (st_[e] != EdgeState::Unset) {
                if (st_[e] != d) return false;
                continue;
            }
            st_[e] = d;
            --total_unset_;
            trail_.push_back(e);
            for (auto [t, role] : etris_[e]) {
                if (--unset_cnt_[t] == 1) --active_;
                if (unset_cnt_[t] == 0) {
                    const auto& te = tris_[t].e;
                    if (cyclic_pattern(st_[te[0]] == EdgeState::Fwd,
                                       st_[te[1]] == EdgeState::Fwd,
                                       st_[te[2]] == EdgeState::Fwd))
                        return false;
                } else if (unset_cnt_[t] == 1) {
                    const auto& te = tris_[t].e;
                    int ur = 0;
                    while (st_[te[ur]] != EdgeState::Unset) ++ur;
                    for (const auto& pat : kCyclic) {
                        bool match = true;
                        for (int r = 0; r < 3; ++r)
                            if (r != ur && (st_[te[r]] == EdgeState::Fwd) != pat[r])
                                match = false;
                        if (match) {
                            // completing with pat[ur] would close the cycle
                            EdgeState forced = pat[ur] ? EdgeState::Bwd : EdgeState::Fwd;
                            queue.emplace_back(te[ur], forced);
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            int e = trail_.back();
            trail_.pop_back();
            for (auto [t, role] : etris_[e]) {
                (void)role;
                if (unset_cnt_[t] == 1) ++active_;
                ++unset_cnt_[t];
            }
            st_[e] = EdgeState::Unset;
            ++total_unset_;
        }
    }

    Count dfs() {
        if (active_ == 0) {
            // no triangle still couples two undecided edges
            return pow2(static_cast<unsigned long>(total_unset_));
        }
        int branch = -1;
        for (int e : order_) {
            if (st_[e] != EdgeState::Unset) continue;
            for (auto [t, role] : etris_[e]) {
                (void)role;
                if (unset_cnt_[t] >= 2) {
                    branch = e;
                    break;
                }
            }
            if (branch >= 0) break;
        }
        Count total = 0;
        for (EdgeState d : {EdgeState::Fwd, EdgeState::Bwd}) {
            std::size_t mark = trail_.size();
            if (assign(branch, d)) total += dfs();
            undo(mark);
        }
        return total;
    }
};

}  // namespace

bool is_cyclic_triangle_free(const Graph& g, const Orientation& o) {
    if (static_cast<int>(o.dir.size()) != g.edge_count())
        throw std::invalid_argument("orientation size mismatch");
    for (const auto& t : edge_triangles(g)) {
        if (cyclic_pattern(o.dir[t.e[0]] == 0, o.dir[t.e[1]] == 0, o.dir[t.e[2]] == 0))
            return false;
    }
    return true;
}

Count oracle_count(const Graph& g) {
    int m = g.edge_count();
    if (m > 30)
        throw std::invalid_argument(
            "oracle_count refuses graphs with more than 30 edges (got " +
            std::to_string(m) + ")");
    auto tris = edge_triangles(g);
    Count count = 0;
    const std::uint32_t lim = std::uint32_t{1} << m;
    for (std::uint32_t mask = 0; mask < lim; ++mask) {
        bool ok = true;
        for (const auto& t : tris) {
            // bit 0 = lower-to-higher, so p = !bit
            bool pab = !((mask >> t.e[0]) & 1);
            bool pbc = !((mask >> t.e[1]) & 1);
            bool pac = !((mask >> t.e[2]) & 1);
            if (cyclic_pattern(pab, pbc, pac)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

Count count_orientations(const Graph& g) {
    return Engine(g).count(PartialOrientation::unset(g));
}

Count count_completions(const Graph& g, const PartialOrientation& p) {
    return Engine(g).count(p);
}

Count enumerate_orientations(const Graph& g,
                             const std::function<void(const Orientation&)>& visitor) {
    int m = g.edge_count();
    auto tris = edge_triangles(g);
    // triangles indexed by their last edge, checked as soon as it is set
    std::vector<std::vector<Tri>> closing(m);
    for (const auto& t : tris) {
        int last = std::max({t.e[0], t.e[1], t.e[2]});
        closing[last].push_back(t);
    }
    Orientation o;
    o.dir.assign(m, 0);
    Count visits = 0;
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            ++visits;
            if (visitor) visitor(o);
            return;
        }
        for (std::uint8_t d : {0, 1}) {
            o.dir[e] = d;
            bool ok = true;
            for (const auto& t : closing[e]) {
                if (cyclic_pattern(o.dir[t.e[0]] == 0, o.dir[t.e[1]] == 0,
                                   o.dir[t.e[2]] == 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, e + 1);
        }
    };
    rec(rec, 0);
    return visits;
}

PropagateResult propagate(const Graph& g, const PartialOrientation& p) {
    return Engine(g).propagate_only(p);
}

}  // namespace orient
