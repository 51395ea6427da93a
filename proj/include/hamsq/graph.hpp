#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamsq {

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 1;

    Edge() = default;
    Edge(int a, int b);

    bool contains(int x) const { return x == u || x == v; }
    int other(int x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
/// All mutating operations live outside the class and return new values.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    std::vector<Edge> edges() const;

    /// Per-vertex adjacency bitmasks; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const;
};

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// G plus an edge between every pair of vertices at distance exactly 2.
Graph square(const Graph& g);

std::vector<int> two_valent_vertices(const Graph& g);
bool is_connected(const Graph& g);

/// Result of a surgery that renames vertices back to a contiguous range.
struct RelabeledGraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<int> new_to_old;
};

RelabeledGraph delete_vertices(const Graph& g, const std::vector<int>& doomed);
RelabeledGraph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_edges(const Graph& g, const std::vector<Edge>& gone);
Graph add_edges(const Graph& g, const std::vector<Edge>& extra);

/// Appends `extra` fresh isolated vertices n..n+extra-1, then adds `cross`.
Graph disjoint_union_with_cross_edges(const Graph& g, int extra, const std::vector<Edge>& cross);

/// Bit-exact graph6 codec (one graph per line, no trailing newline).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace hamsq
