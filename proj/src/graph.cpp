#include "hamsq/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace hamsq {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edge: loop at vertex " + std::to_string(a));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<Edge> uniq;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
        uniq.insert(e);
    }
    for (const Edge& e : uniq) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = static_cast<int>(uniq.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: invalid vertex id " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw std::invalid_argument("graph: adjacency masks need n <= 64");
    std::vector<std::uint64_t> mask(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u]) mask[u] |= std::uint64_t{1} << v;
    return mask;
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> e = g.edges();
    for (int u = 0; u < n; ++u) {
        std::set<int> two_away;
        for (int w : g.neighbors(u))
            for (int x : g.neighbors(w))
                if (x > u && !g.has_edge(u, x)) two_away.insert(x);
        for (int x : two_away) e.emplace_back(u, x);
    }
    return Graph(n, e);
}

std::vector<int> two_valent_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n;
}

RelabeledGraph delete_vertices(const Graph& g, const std::vector<int>& doomed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : doomed) {
        if (v < 0 || v >= n) throw std::invalid_argument("delete_vertices: invalid vertex id");
        gone[v] = 1;
    }
    RelabeledGraph out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (!gone[v]) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    std::vector<Edge> e;
    for (const Edge& ed : g.edges())
        if (!gone[ed.u] && !gone[ed.v]) e.emplace_back(out.old_to_new[ed.u], out.old_to_new[ed.v]);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), e);
    return out;
}

RelabeledGraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<char> kept(g.vertex_count(), 0);
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced_subgraph: invalid vertex id");
        kept[v] = 1;
    }
    std::vector<int> doomed;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!kept[v]) doomed.push_back(v);
    return delete_vertices(g, doomed);
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& gone) {
    std::set<Edge> drop;
    for (const Edge& e : gone) {
        if (e.u < 0 || e.v >= g.vertex_count()) throw std::invalid_argument("delete_edges: invalid edge");
        drop.insert(e);
    }
    std::vector<Edge> e;
    for (const Edge& ed : g.edges())
        if (!drop.count(ed)) e.push_back(ed);
    return Graph(g.vertex_count(), e);
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> e = g.edges();
    for (const Edge& ed : extra) {
        if (ed.u < 0 || ed.v >= g.vertex_count()) throw std::invalid_argument("add_edges: invalid edge");
        e.push_back(ed);
    }
    return Graph(g.vertex_count(), e);
}

Graph disjoint_union_with_cross_edges(const Graph& g, int extra, const std::vector<Edge>& cross) {
    if (extra < 0) throw std::invalid_argument("disjoint_union: negative vertex count");
    const int n = g.vertex_count() + extra;
    std::vector<Edge> e = g.edges();
    for (const Edge& ed : cross) {
        if (ed.u < 0 || ed.v >= n) throw std::invalid_argument("disjoint_union: invalid cross edge");
        e.push_back(ed);
    }
    return Graph(n, e);
}

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

// Reads one 6-bit group, offset 63 per the format.
int g6_byte(unsigned char c) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: non-printable byte in line");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) line.remove_prefix(kGraph6Prefix.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (line.size() - pos < k) throw std::invalid_argument("graph6: malformed length header");
    };

    long long n = 0;
    int first = g6_byte(static_cast<unsigned char>(line[pos]));
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        need(2);
        int second = g6_byte(static_cast<unsigned char>(line[pos + 1]));
        if (second < 63) {
            need(4);
            for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(static_cast<unsigned char>(line[pos + i]));
            pos = 4;
        } else {
            need(8);
            for (int i = 2; i <= 7; ++i) n = (n << 6) | g6_byte(static_cast<unsigned char>(line[pos + i]));
            pos = 8;
        }
    }
    if (n > 100000) throw std::invalid_argument("graph6: vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const long long body = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != body)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<Edge> edges;
    long long bit = 0;
    for (long long byte = 0; byte < body; ++byte) {
        int val = g6_byte(static_cast<unsigned char>(line[pos + byte]));
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (val >> k) & 1;
            if (bit >= bits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Bit index -> pair (i, j), j ascending, i < j.
                long long b = bit;
                long long j = 1;
                while (b >= j) {
                    b -= j;
                    ++j;
                }
                edges.emplace_back(static_cast<int>(b), static_cast<int>(j));
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int used = 0;
    for (long long j = 1; j < n; ++j)
        for (long long i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

}  // namespace hamsq
