#include "hamsq/ham_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "hamsq/connectivity.hpp"

namespace hamsq {

namespace {

using u64 = std::uint64_t;

constexpr u64 bit(int v) { return u64{1} << v; }

/// Injective assignment of candidate edges to witness slots via augmenting
/// paths. Fills assignment[slot] with the chosen edge when requested.
bool match_witnesses(const std::vector<std::vector<Edge>>& cands, std::vector<Edge>* assignment) {
    std::vector<Edge> pool;
    for (const auto& c : cands)
        for (const Edge& e : c)
            if (!std::count(pool.begin(), pool.end(), e)) pool.push_back(e);
    std::sort(pool.begin(), pool.end());
    auto index_of = [&](const Edge& e) {
        return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), e) - pool.begin());
    };
    std::vector<int> owner(pool.size(), -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int slot) -> bool {
        for (const Edge& e : cands[slot]) {
            int idx = index_of(e);
            if (visited[idx]) continue;
            visited[idx] = 1;
            if (owner[idx] == -1 || augment(owner[idx])) {
                owner[idx] = slot;
                return true;
            }
        }
        return false;
    };
    for (size_t slot = 0; slot < cands.size(); ++slot) {
        visited.assign(pool.size(), 0);
        if (!augment(static_cast<int>(slot))) return false;
    }
    if (assignment) {
        assignment->assign(cands.size(), Edge());
        for (size_t idx = 0; idx < pool.size(); ++idx)
            if (owner[idx] != -1) (*assignment)[owner[idx]] = pool[idx];
    }
    return true;
}

struct Searcher {
    const Graph& g;
    const ConstraintSpec& spec;
    SearchOptions opts;
    int n;
    std::vector<u64> adj2;
    std::vector<u64> adjg;

    std::vector<int> order;
    u64 visited = 0;
    int start = 0;
    int goal = -1;  // path mode second endpoint

    // Per-vertex fixed route edges discovered so far (at most two each).
    std::vector<int> fixed_count;
    std::vector<int> in_g_count;
    std::vector<std::array<Edge, 2>> in_g_edges;

    std::vector<int> witness_slot;  // vertex -> slot id or -1
    std::vector<int> slot_vertex;
    std::vector<int> anchor_of;  // vertex -> index into spec.anchors or -1

    std::uint64_t nodes = 0;
    bool timed_out = false;
    bool found_any = false;
    Certificate best;
    std::chrono::steady_clock::time_point deadline;

    Searcher(const Graph& graph, const ConstraintSpec& s, const SearchOptions& o)
        : g(graph), spec(s), opts(o), n(graph.vertex_count()) {
        adj2 = square(g).adjacency_masks();
        adjg = g.adjacency_masks();
        fixed_count.assign(n, 0);
        in_g_count.assign(n, 0);
        in_g_edges.assign(n, {});
        witness_slot.assign(n, -1);
        anchor_of.assign(n, -1);
        for (int x : spec.witness_vertices) {
            if (witness_slot[x] != -1) throw std::invalid_argument("solve: duplicate witness vertex");
            witness_slot[x] = static_cast<int>(slot_vertex.size());
            slot_vertex.push_back(x);
        }
        for (size_t i = 0; i < spec.anchors.size(); ++i) anchor_of[spec.anchors[i].vertex] = static_cast<int>(i);
    }

    int final_degree(int v) const {
        if (spec.kind == CertKind::cycle) return 2;
        return (v == start || v == goal) ? 1 : 2;
    }

    bool deadline_hit() {
        if ((nodes & 63) == 0 && std::chrono::steady_clock::now() >= deadline) timed_out = true;
        return timed_out;
    }

    // Registers a fixed route edge. Returns false when a both_edges anchor
    // picks up an edge outside the base graph; the caller must undo with
    // remove_fixed either way.
    bool add_fixed(const Edge& e) {
        const bool in_g = (adjg[e.u] >> e.v) & 1;
        bool ok = true;
        for (int v : {e.u, e.v}) {
            ++fixed_count[v];
            if (in_g) in_g_edges[v][in_g_count[v]++] = e;
            int a = anchor_of[v];
            if (a != -1 && spec.anchors[a].mode == AnchorMode::both_edges && !in_g) ok = false;
        }
        return ok;
    }

    void remove_fixed(const Edge& e) {
        const bool in_g = (adjg[e.u] >> e.v) & 1;
        for (int v : {e.u, e.v}) {
            --fixed_count[v];
            if (in_g) --in_g_count[v];
        }
    }

    // Feasibility of a vertex whose incident route edges are all fixed.
    bool closed_ok(int v) const {
        int a = anchor_of[v];
        if (a != -1) {
            switch (spec.anchors[a].mode) {
                case AnchorMode::both_edges:
                    if (in_g_count[v] != fixed_count[v]) return false;
                    break;
                case AnchorMode::at_least_one:
                    if (in_g_count[v] < 1) return false;
                    break;
                case AnchorMode::exactly_one:
                    if (in_g_count[v] != 1) return false;
                    break;
            }
        }
        if (witness_slot[v] != -1 && in_g_count[v] == 0) return false;
        return true;
    }

    // Matching restricted to witness vertices whose edges are all fixed;
    // failure here can never be repaired by later extensions.
    bool closed_witnesses_matchable() const {
        std::vector<std::vector<Edge>> cands;
        for (int v : slot_vertex) {
            if (fixed_count[v] < final_degree(v)) continue;
            std::vector<Edge> c(in_g_edges[v].begin(), in_g_edges[v].begin() + in_g_count[v]);
            if (c.empty()) return false;
            cands.push_back(std::move(c));
        }
        if (cands.size() <= 1) return true;
        return match_witnesses(cands, nullptr);
    }

    bool all_reachable(int head) const {
        u64 todo = ~visited & ((n == 64) ? ~u64{0} : (bit(n) - 1));
        if (todo == 0) return true;
        u64 frontier = bit(head);
        u64 seen = frontier;
        const u64 avail = todo | frontier;
        while (frontier) {
            u64 next = 0;
            u64 f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj2[v] & avail & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return (todo & ~seen) == 0;
    }

    bool anchors_satisfied_finally() const {
        for (const AnchorSpec& a : spec.anchors) {
            const int v = a.vertex;
            switch (a.mode) {
                case AnchorMode::both_edges:
                    if (in_g_count[v] != fixed_count[v]) return false;
                    break;
                case AnchorMode::at_least_one:
                    if (in_g_count[v] < 1) return false;
                    break;
                case AnchorMode::exactly_one:
                    if (in_g_count[v] != 1) return false;
                    break;
            }
        }
        if (spec.anchors_need_distinct_triple) {
            int dbl = -1, single = -1;
            for (const AnchorSpec& a : spec.anchors) {
                if (a.mode == AnchorMode::both_edges) dbl = a.vertex;
                if (a.mode == AnchorMode::at_least_one) single = a.vertex;
            }
            if (dbl < 0 || single < 0) return false;
            bool extra = false;
            for (int i = 0; i < in_g_count[single]; ++i) {
                const Edge& e = in_g_edges[single][i];
                bool clash = false;
                for (int j = 0; j < in_g_count[dbl]; ++j)
                    if (in_g_edges[dbl][j] == e) clash = true;
                if (!clash) extra = true;
            }
            if (!extra) return false;
        }
        return true;
    }

    bool finish_checks(Certificate* cert_out) {
        if (!anchors_satisfied_finally()) return false;
        std::vector<std::vector<Edge>> cands;
        for (int v : slot_vertex) {
            std::vector<Edge> c(in_g_edges[v].begin(), in_g_edges[v].begin() + in_g_count[v]);
            if (c.empty()) return false;
            std::sort(c.begin(), c.end());
            cands.push_back(std::move(c));
        }
        std::vector<Edge> assignment;
        if (!cands.empty() && !match_witnesses(cands, &assignment)) return false;
        if (cert_out) {
            cert_out->kind = spec.kind;
            cert_out->order = order;
            cert_out->witnesses.clear();
            for (size_t slot = 0; slot < cands.size(); ++slot)
                cert_out->witnesses.emplace_back(slot_vertex[slot], assignment[slot]);
            *cert_out = canonical_certificate(*cert_out);
        }
        return true;
    }

    // Returns true to stop the whole search (first hit outside lex_min mode).
    bool complete() {
        Certificate cert;
        if (spec.kind == CertKind::cycle) {
            const int head = order.back();
            if (!((adj2[head] >> start) & 1)) return false;
            const Edge closing(head, start);
            bool ok = add_fixed(closing);
            if (ok) ok = closed_ok(head) && closed_ok(start) && finish_checks(&cert);
            remove_fixed(closing);
            if (!ok) return false;
        } else {
            if (order.back() != goal) return false;
            if (!finish_checks(&cert)) return false;
        }
        if (opts.accept && !opts.accept(cert)) return false;
        if (!found_any || cert_less(cert, best)) best = cert;
        found_any = true;
        return !opts.lex_min;
    }

    static bool cert_less(const Certificate& a, const Certificate& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.witnesses < b.witnesses;
    }

    bool dfs() {
        ++nodes;
        if (deadline_hit()) return true;
        if (static_cast<int>(order.size()) == n) return complete();

        const int head = order.back();
        if (!all_reachable(head)) return false;
        u64 cand = adj2[head] & ~visited;
        if (spec.kind == CertKind::path && static_cast<int>(order.size()) < n - 1) cand &= ~bit(goal);

        // Fail-first: most constrained candidate vertex first.
        std::vector<std::pair<int, int>> ranked;
        for (u64 c = cand; c; c &= c - 1) {
            const int v = std::countr_zero(c);
            ranked.emplace_back(std::popcount(adj2[v] & ~visited & ~bit(v)), v);
        }
        std::sort(ranked.begin(), ranked.end());

        for (auto [key, v] : ranked) {
            (void)key;
            const Edge e(head, v);
            bool ok = add_fixed(e);
            if (ok && fixed_count[head] == final_degree(head))
                ok = closed_ok(head) && closed_witnesses_matchable();
            if (ok) {
                order.push_back(v);
                visited |= bit(v);
                const bool stop = dfs();
                visited &= ~bit(v);
                order.pop_back();
                if (stop) {
                    remove_fixed(e);
                    return true;
                }
            }
            remove_fixed(e);
        }
        return false;
    }

    SearchResult run() {
        SearchResult res;
        deadline = std::chrono::steady_clock::now() + opts.timeout;
        if (spec.kind == CertKind::cycle) {
            if (n < 3) return res;  // absent
            start = 0;
            for (int v = 1; v < n; ++v)
                if (std::popcount(adj2[v]) < std::popcount(adj2[start])) start = v;
        } else {
            start = spec.endpoints->first;
            goal = spec.endpoints->second;
        }
        order.push_back(start);
        visited = bit(start);
        dfs();
        res.nodes_expanded = nodes;
        if (found_any) {
            res.status = SearchStatus::found;
            res.certificate = best;
        } else {
            res.status = timed_out ? SearchStatus::unknown : SearchStatus::absent;
        }
        return res;
    }
};

void require_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

SearchResult solve(const Graph& g, const ConstraintSpec& spec, const SearchOptions& opts) {
    if (g.vertex_count() > opts.max_n || g.vertex_count() > 64)
        throw std::invalid_argument("solve: graph exceeds solver cap");
    if (spec.kind == CertKind::path) {
        if (!spec.endpoints) throw std::invalid_argument("solve: path search needs endpoints");
        if (spec.endpoints->first == spec.endpoints->second)
            throw std::invalid_argument("solve: path endpoints must differ");
        require_vertex(g, spec.endpoints->first, "solve");
        require_vertex(g, spec.endpoints->second, "solve");
    }
    for (int x : spec.witness_vertices) require_vertex(g, x, "solve");
    for (const AnchorSpec& a : spec.anchors) require_vertex(g, a.vertex, "solve");
    Searcher s(g, spec, opts);
    return s.run();
}

SearchResult find_h_cycle(const Graph& g, const std::vector<int>& x, const SearchOptions& opts) {
    std::set<int> uniq(x.begin(), x.end());
    if (uniq.size() != x.size()) throw std::invalid_argument("find_h_cycle: witness vertices must be distinct");
    if (static_cast<int>(x.size()) > g.vertex_count())
        throw std::invalid_argument("find_h_cycle: more witnesses than vertices");
    ConstraintSpec spec;
    spec.kind = CertKind::cycle;
    spec.witness_vertices = x;
    return solve(g, spec, opts);
}

SearchResult find_f_path(const Graph& g, int x1, int x2, const std::vector<int>& r, const SearchOptions& opts) {
    if (x1 == x2) throw std::invalid_argument("find_f_path: endpoints must differ");
    std::set<int> uniq(r.begin(), r.end());
    if (uniq.size() != r.size() || uniq.count(x1) || uniq.count(x2))
        throw std::invalid_argument("find_f_path: constrained vertices must be distinct and avoid the endpoints");
    ConstraintSpec spec;
    spec.kind = CertKind::path;
    spec.endpoints = {{x1, x2}};
    spec.witness_vertices = r;
    return solve(g, spec, opts);
}

SearchResult find_strong_f3_path(const Graph& g, int x1, int x2, int x3, int strong_index,
                                 const SearchOptions& opts) {
    if (strong_index != 1 && strong_index != 2)
        throw std::invalid_argument("find_strong_f3_path: index must be 1 or 2");
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw std::invalid_argument("find_strong_f3_path: vertices must be distinct");
    ConstraintSpec spec;
    spec.kind = CertKind::path;
    spec.endpoints = {{x1, x2}};
    spec.witness_vertices = {x3, strong_index == 1 ? x1 : x2};
    return solve(g, spec, opts);
}

SearchResult find_thm3_cycle(const Graph& g, int v, int w, const SearchOptions& opts) {
    if (v == w) throw std::invalid_argument("find_thm3_cycle: vertices must differ");
    require_vertex(g, v, "find_thm3_cycle");
    require_vertex(g, w, "find_thm3_cycle");
    if (!is_two_block(g)) throw std::invalid_argument("find_thm3_cycle: graph is not a 2-block");
    ConstraintSpec spec;
    spec.kind = CertKind::cycle;
    spec.anchors = {{v, AnchorMode::both_edges}, {w, AnchorMode::at_least_one}};
    spec.anchors_need_distinct_triple = g.has_edge(v, w);
    return solve(g, spec, opts);
}

Thm4Result find_thm4_cycle(const Graph& g, int u1, int u2, const SearchOptions& opts) {
    require_vertex(g, u1, "find_thm4_cycle");
    require_vertex(g, u2, "find_thm4_cycle");
    if (u1 == u2) throw std::invalid_argument("find_thm4_cycle: vertices must differ");
    auto chain = as_blockchain(g);
    if (!chain) throw std::invalid_argument("find_thm4_cycle: graph is not a blockchain");
    for (int c : chain->cutvertices)
        if (c == u1 || c == u2) throw std::invalid_argument("find_thm4_cycle: vertices must be inner");
    auto in_block = [](const std::vector<int>& blk, int v) {
        return std::binary_search(blk.begin(), blk.end(), v);
    };
    if (!chain->trivial) {
        const bool split = (in_block(chain->blocks.front(), u1) && in_block(chain->blocks.back(), u2)) ||
                           (in_block(chain->blocks.front(), u2) && in_block(chain->blocks.back(), u1));
        if (!split) throw std::invalid_argument("find_thm4_cycle: vertices must lie in different endblocks");
    }

    auto block_size_of_inner = [&](int v) -> size_t {
        for (const auto& blk : chain->blocks)
            if (in_block(blk, v)) return blk.size();
        return 0;
    };
    Thm4Result out;
    out.u1_in_two_block = block_size_of_inner(u1) >= 3;
    out.u2_in_two_block = block_size_of_inner(u2) >= 3;

    auto run = [&](AnchorMode bridge_mode) {
        ConstraintSpec spec;
        spec.kind = CertKind::cycle;
        spec.anchors = {
            {u1, out.u1_in_two_block ? AnchorMode::both_edges : bridge_mode},
            {u2, out.u2_in_two_block ? AnchorMode::both_edges : bridge_mode},
        };
        return solve(g, spec, opts);
    };
    out.search = run(AnchorMode::exactly_one);
    if (out.search.status == SearchStatus::absent && (!out.u1_in_two_block || !out.u2_in_two_block)) {
        SearchResult relaxed = run(AnchorMode::at_least_one);
        if (relaxed.status == SearchStatus::found) {
            out.search = relaxed;
            out.flagged_for_review = true;
        }
    }
    return out;
}

}  // namespace hamsq
