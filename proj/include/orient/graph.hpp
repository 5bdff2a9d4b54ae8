#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orient {

inline constexpr int kMaxVertices = 64;

// Vertex subset of a graph with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline int vs_size(VertexSet s) { return std::popcount(s); }
inline bool vs_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet vs_single(int v) { return VertexSet{1} << v; }
inline VertexSet vs_full(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Ordered list of indices into Graph::edges(), strictly increasing.
using EdgeSet = std::vector<int>;

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// Simple undirected graph on at most 64 vertices. Immutable once built;
// adjacency is a bitset per vertex and the edge list is kept in fixed
// lexicographic order (u < v, sorted by (u, v)), which is the order every
// Orientation bitmap refers to.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, const std::vector<std::pair<int, int>>& edge_list = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    bool has_edge(int u, int v) const {
        return u != v && vs_contains(adj_[u], v);
    }

    // Index of {u,v} in edges(), or -1 if not an edge.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<std::pair<int, int>> edges_;
};

// graph6 text format, bit-exact per the format definition: size header,
// then upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed 6 per byte, big-endian within byte, each byte offset by 63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Complete multipartite graph with consecutive vertex blocks. K_r is
// complete_multipartite(vector(r, 1)); K_{a,b} is complete_multipartite({a,b}).
Graph complete_multipartite(const std::vector<int>& part_sizes);

// New graph on |s| vertices preserving adjacency; second member maps new
// labels back to the original ones.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

// All vertex triples {a<b<c} inducing K_3, in lexicographic order.
std::vector<std::array<int, 3>> triangles_of(const Graph& g);

int clique_number(const Graph& g);

// Indices of all edges with one endpoint in a and the other in b.
// The sets must be disjoint.
EdgeSet edges_between(const Graph& g, VertexSet a, VertexSet b);

// |N(x) ∩ N(y) ∩ within|
int common_neighbors(const Graph& g, int x, int y, VertexSet within);

}  // namespace orient
