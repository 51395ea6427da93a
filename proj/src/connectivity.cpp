#include "hamsq/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hamsq {

bool BlockDecomposition::is_cutvertex(int v) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> block_vertex_sets;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(const Edge& until) {
        std::set<int> verts;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.u);
            verts.insert(e.v);
            if (e == until) break;
        }
        block_vertex_sets.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent) {
                parent = -2;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (disc[v] == -1) {
                ++children;
                Edge tree_edge(u, v);
                edge_stack.push_back(tree_edge);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (disc[u] > 0 || children > 1) is_cut[u] = 1;
                    pop_block(tree_edge);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back(Edge(u, v));
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph is disconnected");
    const int n = g.vertex_count();
    BlockDecomposition out;
    if (n == 0) return out;
    if (n == 1) {
        out.blocks.push_back({0});
        out.block_cutvertices.push_back({});
        return out;
    }
    BlockFinder finder(g);
    finder.dfs(0, -1);
    out.blocks = std::move(finder.block_vertex_sets);
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < n; ++v)
        if (finder.is_cut[v]) out.cutvertices.push_back(v);
    for (const auto& blk : out.blocks) out.block_cutvertices.push_back(sorted_intersection(blk, out.cutvertices));
    return out;
}

std::vector<int> cut_vertices(const Graph& g) {
    return blocks(g).cutvertices;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("vertex_connectivity: n > 64 unsupported");
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;

    std::vector<int> subset;
    std::function<bool(int, int)> disconnects_some = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            auto cut = delete_vertices(g, subset);
            return cut.graph.vertex_count() > 1 && !is_connected(cut.graph);
        }
        for (int v = start; v <= n - remaining; ++v) {
            subset.push_back(v);
            if (disconnects_some(v + 1, remaining - 1)) {
                subset.pop_back();
                return true;
            }
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= n - 2; ++k)
        if (disconnects_some(0, k)) return k;
    return n - 1;
}

bool is_two_block(const Graph& g) {
    return g.vertex_count() >= 3 && vertex_connectivity(g) >= 2;
}

std::optional<Blockchain> as_blockchain(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    BlockDecomposition dec = blocks(g);
    const int k = static_cast<int>(dec.blocks.size());
    Blockchain chain;
    if (k == 1) {
        chain.blocks = dec.blocks;
        chain.trivial = true;
        return chain;
    }
    // bc(G) is a path iff every cutvertex lies in exactly 2 blocks and every
    // block holds at most 2 cutvertices, with exactly two endblocks.
    std::vector<int> cut_block_count(g.vertex_count(), 0);
    for (const auto& bc : dec.block_cutvertices) {
        if (bc.size() > 2) return std::nullopt;
        for (int c : bc) ++cut_block_count[c];
    }
    for (int c : dec.cutvertices)
        if (cut_block_count[c] != 2) return std::nullopt;
    std::vector<int> endblock_ids;
    for (int i = 0; i < k; ++i)
        if (dec.block_cutvertices[i].size() <= 1) endblock_ids.push_back(i);
    if (endblock_ids.size() != 2) return std::nullopt;

    int first = endblock_ids[0];
    if (dec.blocks[endblock_ids[1]] < dec.blocks[first]) first = endblock_ids[1];

    std::vector<char> used(k, 0);
    int current = first;
    int enter_cut = -1;
    for (int step = 0; step < k; ++step) {
        used[current] = 1;
        chain.blocks.push_back(dec.blocks[current]);
        int exit_cut = -1;
        for (int c : dec.block_cutvertices[current])
            if (c != enter_cut) exit_cut = c;
        if (exit_cut == -1) break;
        chain.cutvertices.push_back(exit_cut);
        int next = -1;
        for (int i = 0; i < k; ++i)
            if (!used[i] && std::binary_search(dec.blocks[i].begin(), dec.blocks[i].end(), exit_cut)) next = i;
        if (next == -1) return std::nullopt;
        current = next;
        enter_cut = exit_cut;
    }
    if (chain.blocks.size() != static_cast<size_t>(k)) return std::nullopt;
    chain.trivial = false;
    return chain;
}

std::vector<int> inner_vertices(const Graph& g, const Blockchain& chain) {
    std::vector<char> cut(g.vertex_count(), 0);
    for (int c : chain.cutvertices) cut[c] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cut[v]) out.push_back(v);
    return out;
}

std::vector<Edge> d_edge_set(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) out.push_back(e);
    return out;
}

bool is_dt_graph(const Graph& g) {
    return d_edge_set(g).empty();
}

bool is_edge_critical_block(const Graph& g) {
    if (!is_two_block(g) || vertex_connectivity(g) != 2) return false;
    for (const Edge& e : g.edges())
        if (vertex_connectivity(delete_edges(g, {e})) != 1) return false;
    return true;
}

namespace {

bool is_dt_two_block(const Graph& g, const std::vector<int>& block_vertices) {
    if (block_vertices.size() < 3) return false;
    RelabeledGraph sub = induced_subgraph(g, block_vertices);
    return is_dt_graph(sub.graph);
}

}  // namespace

std::optional<Edge> find_reducing_edge(const Graph& g) {
    if (!is_edge_critical_block(g)) throw std::invalid_argument("find_reducing_edge: graph is not an edge-critical block");
    std::vector<Edge> candidates = d_edge_set(g);
    if (candidates.empty()) throw std::invalid_argument("find_reducing_edge: graph is already a DT-graph");
    for (const Edge& f : candidates) {
        Graph cut = delete_edges(g, {f});
        auto chain = as_blockchain(cut);
        if (!chain || chain->trivial) continue;
        if (is_dt_two_block(cut, chain->blocks.front()) || is_dt_two_block(cut, chain->blocks.back())) return f;
    }
    return std::nullopt;
}

}  // namespace hamsq
