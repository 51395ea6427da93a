#include "hamsq/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hamsq/connectivity.hpp"

namespace hamsq {

namespace {

// Iterated neighbor-color refinement. Colors are ranks of sorted signatures,
// so they do not depend on the input labeling.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> position_color;  // required color at each position
    std::vector<int> perm;            // position -> original vertex
    std::vector<char> used;
    std::vector<std::uint8_t> best;   // bit per pair, graph6 order
    std::vector<std::uint8_t> cur;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        color = refine_colors(g);
        std::vector<std::pair<int, int>> by_color;
        for (int v = 0; v < n; ++v) by_color.emplace_back(color[v], v);
        std::sort(by_color.begin(), by_color.end());
        position_color.resize(n);
        for (int i = 0; i < n; ++i) position_color[i] = by_color[i].first;
        perm.assign(n, -1);
        used.assign(n, 0);
        cur.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
    }

    // Bits contributed by placing vertex at position p: pairs (i, p), i < p.
    void assign(int p) {
        if (p == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        const size_t base = static_cast<size_t>(p) * (p - 1) / 2;
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != position_color[p]) continue;
            for (int i = 0; i < p; ++i) cur[base + i] = g.has_edge(perm[i], v) ? 1 : 0;
            if (have_best) {
                // Prune branches whose full prefix already exceeds the best.
                const size_t len = base + p;
                bool worse = false;
                for (size_t i = 0; i < len; ++i) {
                    if (cur[i] == best[i]) continue;
                    worse = cur[i] > best[i];
                    break;
                }
                if (worse) continue;
            }
            perm[p] = v;
            used[v] = 1;
            assign(p + 1);
            used[v] = 0;
        }
    }
};

std::string code_to_string(const std::vector<std::uint8_t>& bits, int n) {
    std::string s;
    s.push_back(static_cast<char>(n));
    int acc = 0, cnt = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++cnt == 6) {
            s.push_back(static_cast<char>(acc + 63));
            acc = 0;
            cnt = 0;
        }
    }
    if (cnt) s.push_back(static_cast<char>((acc << (6 - cnt)) + 63));
    return s;
}

}  // namespace

std::string canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::string(1, '\0');
    CanonSearch search(g);
    search.assign(0);
    return code_to_string(search.best, n);
}

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return g;
    CanonSearch search(g);
    search.assign(0);
    std::vector<Edge> edges;
    size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (search.best[idx]) edges.emplace_back(i, j);
    return Graph(n, edges);
}

namespace {

std::vector<Graph> augment(const std::vector<Graph>& smaller, int n, bool connected_only) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> out;
    for (const Graph& h : smaller) {
        const int limit = 1 << (n - 1);
        const int lo = connected_only ? 1 : 0;
        for (int mask = lo; mask < limit; ++mask) {
            std::vector<Edge> edges = h.edges();
            for (int v = 0; v < n - 1; ++v)
                if ((mask >> v) & 1) edges.emplace_back(v, n - 1);
            Graph candidate(n, edges);
            Graph canon = canonical_form(candidate);
            std::string key = emit_graph6(canon);
            if (seen.insert(key).second) out.emplace_back(std::move(key), std::move(canon));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [key, graph] : out) result.push_back(std::move(graph));
    return result;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative order");
    if (n > 10) throw std::invalid_argument("enumerate_graphs: order too large for exhaustive generation");
    std::vector<Graph> cur = {empty_graph(0)};
    for (int k = 1; k <= n; ++k) cur = augment(cur, k, false);
    return cur;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_connected_graphs: negative order");
    if (n > 10) throw std::invalid_argument("enumerate_connected_graphs: order too large");
    if (n == 0) return {};
    std::vector<Graph> cur = {empty_graph(1)};
    for (int k = 2; k <= n; ++k) cur = augment(cur, k, true);
    return cur;
}

std::vector<Graph> enumerate_two_blocks(int n) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_connected_graphs(n))
        if (is_two_block(g)) out.push_back(g);
    return out;
}

std::vector<Graph> enumerate_blockchains(int n, bool nontrivial_only) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_connected_graphs(n)) {
        auto chain = as_blockchain(g);
        if (!chain) continue;
        if (nontrivial_only && chain->trivial) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace hamsq
