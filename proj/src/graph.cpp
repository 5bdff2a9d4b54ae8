#include "orient/graph.hpp"

#include <algorithm>

namespace orient {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[u] |= vs_single(v);
        adj_[v] |= vs_single(u);
    }
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (vs_contains(adj_[u], v)) edges_.emplace_back(u, v);
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges_.begin());
}

namespace {

// Upper-triangle bit positions in graph6 column order: x(0,1), x(0,2),
// x(1,2), x(0,3), x(1,3), x(2,3), ...
std::vector<std::pair<int, int>> triangle_order(int n) {
    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) order.emplace_back(u, v);
    return order;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > text.size())
            throw Graph6Error("truncated graph6 input", text.size());
    };
    need(1);
    long n;
    if (text[0] == '~') {
        // extended size header: '~' followed by three bytes of 6 bits each
        need(4);
        long bits = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126)
                throw Graph6Error("invalid size header byte", i);
            bits = (bits << 6) | (c - 63);
        }
        n = bits;
        pos = 4;
    } else {
        int c = static_cast<unsigned char>(text[0]);
        if (c < 63 || c > 126) throw Graph6Error("invalid header byte", 0);
        n = c - 63;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph too large: n=" + std::to_string(n), 0);

    auto order = triangle_order(static_cast<int>(n));
    std::size_t nbits = order.size();
    std::size_t nbytes = (nbits + 5) / 6;
    need(nbytes);

    std::vector<std::pair<int, int>> edge_list;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int c = static_cast<unsigned char>(text[pos + i]);
        if (c < 63 || c > 126)
            throw Graph6Error("invalid body byte", pos + i);
        int bits = c - 63;
        for (int b = 0; b < 6; ++b) {
            std::size_t k = i * 6 + b;
            bool bit = (bits >> (5 - b)) & 1;
            if (k < nbits) {
                if (bit) edge_list.push_back(order[k]);
            } else if (bit) {
                throw Graph6Error("nonzero padding bit", pos + i);
            }
        }
    }
    pos += nbytes;
    if (pos != text.size())
        throw Graph6Error("trailing garbage after graph6 body", pos);
    return Graph(static_cast<int>(n), edge_list);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    auto order = triangle_order(n);
    for (std::size_t i = 0; i < order.size(); i += 6) {
        int bits = 0;
        for (int b = 0; b < 6 && i + b < order.size(); ++b) {
            auto [u, v] = order[i + b];
            if (g.has_edge(u, v)) bits |= 1 << (5 - b);
        }
        out.push_back(static_cast<char>(bits + 63));
    }
    return out;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int p : part_sizes) {
        if (p <= 0) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
    std::vector<int> part_of(n);
    int idx = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[idx++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edge_list.emplace_back(u, v);
    return Graph(n, edge_list);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    std::vector<int> map;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (vs_contains(s, v)) map.push_back(v);
    std::vector<int> inv(g.vertex_count(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edge_list;
    for (auto [u, v] : g.edges())
        if (inv[u] >= 0 && inv[v] >= 0) edge_list.emplace_back(inv[u], inv[v]);
    return {Graph(static_cast<int>(map.size()), edge_list), map};
}

std::vector<std::array<int, 3>> triangles_of(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            VertexSet common = g.neighbors(a) & g.neighbors(b) & ~vs_full(b + 1);
            while (common) {
                int c = std::countr_zero(common);
                common &= common - 1;
                tris.push_back({a, b, c});
            }
        }
    return tris;
}

namespace {

int clique_search(const Graph& g, VertexSet cand, int depth, int best) {
    if (cand == 0) return depth;
    if (depth + vs_size(cand) <= best) return best;  // bound
    while (cand) {
        if (depth + vs_size(cand) <= best) break;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        best = std::max(best, clique_search(g, cand & g.neighbors(v), depth + 1, best));
    }
    return best;
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return clique_search(g, vs_full(g.vertex_count()), 0, 0);
}

EdgeSet edges_between(const Graph& g, VertexSet a, VertexSet b) {
    if (a & b) throw std::invalid_argument("edges_between: sets overlap");
    EdgeSet out;
    const auto& es = g.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        auto [u, v] = es[i];
        bool cross = (vs_contains(a, u) && vs_contains(b, v)) ||
                     (vs_contains(b, u) && vs_contains(a, v));
        if (cross) out.push_back(i);
    }
    return out;
}

int common_neighbors(const Graph& g, int x, int y, VertexSet within) {
    if (x == y) throw std::invalid_argument("common_neighbors: x == y");
    return vs_size(g.neighbors(x) & g.neighbors(y) & within);
}

}  // namespace orient
