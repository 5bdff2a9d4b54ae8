#include "orient/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "orient/closed_forms.hpp"
#include "orient/orientation.hpp"

namespace orient {

namespace {

// Exact lexicographic minimum over all placements, explored greedily: at
// every position only the vertices producing the minimal adjacency column
// against the already-placed prefix can still lead to the minimum.
// Interchangeable twins (identical adjacency off the pair) are explored once.
struct CanonSearch {
    const Graph& g;
    int n;
    int nbits;
    std::vector<int> placed;
    std::vector<std::uint32_t> cols;
    std::uint64_t best = ~std::uint64_t{0};

    explicit CanonSearch(const Graph& gg)
        : g(gg), n(gg.vertex_count()), nbits(n * (n - 1) / 2) {}

    void run() {
        if (nbits < 64) best = (std::uint64_t{1} << nbits) - 1;
        placed.assign(n, -1);
        cols.assign(n, 0);
        dfs(0, 0, 0);
    }

    void dfs(int p, VertexSet used, std::uint64_t prefix) {
        if (p == n) {
            best = std::min(best, prefix);
            return;
        }
        int rembits = 0;
        for (int q = p; q < n; ++q) rembits += q;
        if (p > 0 && (prefix << rembits) > best) return;

        std::uint32_t min_col = ~std::uint32_t{0};
        std::vector<std::pair<int, std::uint32_t>> cand;
        for (int w = 0; w < n; ++w) {
            if (vs_contains(used, w)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < p; ++i)
                col |= static_cast<std::uint32_t>((g.neighbors(placed[i]) >> w) & 1)
                       << (p - 1 - i);
            min_col = std::min(min_col, col);
            cand.emplace_back(w, col);
        }
        std::vector<int> taken;
        for (auto [w, col] : cand) {
            if (col != min_col) continue;
            bool twin = false;
            for (int u : taken) {
                VertexSet off = ~(vs_single(u) | vs_single(w));
                if (((g.neighbors(u) ^ g.neighbors(w)) & off) == 0) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            taken.push_back(w);
            placed[p] = w;
            dfs(p + 1, used | vs_single(w), (prefix << p) | min_col);
        }
        placed[p] = -1;
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("canonical_form guard: n <= 10");
    if (g.vertex_count() <= 1) return 0;
    CanonSearch s(g);
    s.run();
    return s.best;
}

Graph graph_from_form(CanonicalForm form, int n) {
    int nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edge_list;
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if ((form >> (nbits - 1 - k)) & 1) edge_list.emplace_back(u, v);
            ++k;
        }
    return Graph(n, edge_list);
}

std::vector<Graph> generate_all(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("generate_all guard: 1 <= n <= 8");
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<CanonicalForm> forms;
        for (const Graph& parent : reps) {
            for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
                auto pairs = parent.edges();
                for (int w = 0; w < k - 1; ++w)
                    if (vs_contains(nb, w)) pairs.emplace_back(w, k - 1);
                forms.insert(canonical_form(Graph(k, pairs)));
            }
        }
        reps.clear();
        for (CanonicalForm f : forms) reps.push_back(graph_from_form(f, k));
    }
    return reps;
}

std::vector<Graph> filtered_classes(int n,
                                    const std::function<bool(const Graph&)>& pred) {
    std::vector<Graph> out;
    for (Graph& g : generate_all(n))
        if (pred(g)) out.push_back(std::move(g));
    return out;
}

MaximizerReport find_maximizers(int n, bool prune, int workers) {
    auto classes = generate_all(n);
    MaximizerReport rep;
    rep.n = n;
    rep.max_count = 0;

    struct Hit {
        CanonicalForm form;
        Count count;
    };
    auto worker_run = [&](std::size_t begin, std::size_t step, std::vector<Hit>& hits,
                          int& counted, int& pruned) {
        Count local_best = 0;
        for (std::size_t i = begin; i < classes.size(); i += step) {
            const Graph& g = classes[i];
            if (prune && pow2(g.edge_count()) < local_best) {
                ++pruned;
                continue;
            }
            Count c = count_orientations(g);
            ++counted;
            if (c > local_best) local_best = c;
            if (c >= local_best) hits.push_back({canonical_form(g), c});
        }
    };

    workers = std::max(1, workers);
    std::vector<std::vector<Hit>> hits(workers);
    std::vector<int> counted(workers, 0), pruned(workers, 0);
    if (workers == 1) {
        worker_run(0, 1, hits[0], counted[0], pruned[0]);
    } else {
        std::vector<std::thread> ths;
        for (int w = 0; w < workers; ++w)
            ths.emplace_back(worker_run, w, workers, std::ref(hits[w]),
                             std::ref(counted[w]), std::ref(pruned[w]));
        for (auto& t : ths) t.join();
    }

    for (int w = 0; w < workers; ++w) {
        rep.classes_counted += counted[w];
        rep.classes_pruned += pruned[w];
        for (const Hit& h : hits[w])
            if (h.count > rep.max_count) rep.max_count = h.count;
    }
    std::set<CanonicalForm> maxers;
    for (int w = 0; w < workers; ++w)
        for (const Hit& h : hits[w])
            if (h.count == rep.max_count) maxers.insert(h.form);
    rep.maximizers.assign(maxers.begin(), maxers.end());
    return rep;
}

TheoremReport verify_theorem(int n, bool prune, int workers) {
    MaximizerReport mr = find_maximizers(n, prune, workers);
    TheoremReport tr;
    tr.n = n;
    tr.max_count = mr.max_count;
    tr.expected = std::max(bipartite_max(n), factorial(n));
    tr.maximizers = mr.maximizers;
    tr.pass = tr.max_count == tr.expected;
    if (n == 8) {
        CanonicalForm k44 = canonical_form(complete_multipartite({4, 4}));
        tr.unique_k44 = tr.maximizers.size() == 1 && tr.maximizers[0] == k44;
        tr.pass = tr.pass && tr.unique_k44;
    }
    return tr;
}

}  // namespace orient
