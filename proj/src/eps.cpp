#include "hamsq/eps.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "hamsq/connectivity.hpp"

namespace hamsq {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

void require_cycle_of(const Graph& g, const std::vector<int>& k, const char* what) {
    if (k.size() < 3) throw std::invalid_argument(std::string(what) + ": cycle too short");
    std::set<int> uniq(k.begin(), k.end());
    if (uniq.size() != k.size()) throw std::invalid_argument(std::string(what) + ": repeated cycle vertex");
    for (size_t i = 0; i < k.size(); ++i) {
        int u = k[i], v = k[(i + 1) % k.size()];
        if (u < 0 || u >= g.vertex_count() || !g.has_edge(u, v))
            throw std::invalid_argument(std::string(what) + ": vertex sequence is not a cycle of the graph");
    }
}

void require_w(const Graph& g, const std::vector<int>& w, const char* what) {
    std::set<int> uniq(w.begin(), w.end());
    if (uniq.size() != w.size()) throw std::invalid_argument(std::string(what) + ": repeated vertex in W");
    for (int v : w)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument(std::string(what) + ": W vertex out of range");
}

std::vector<Edge> cycle_edges(const std::vector<int>& k) {
    std::vector<Edge> out;
    for (size_t i = 0; i < k.size(); ++i) out.emplace_back(k[i], k[(i + 1) % k.size()]);
    return out;
}

}  // namespace

CheckResult validate_eps(const Graph& host, const EpsGraph& eps) {
    const int n = host.vertex_count();
    std::set<Edge> e_set, p_set;
    for (const Edge& e : eps.e_part) {
        if (e.u < 0 || e.v >= n || !host.has_edge(e.u, e.v)) return {false, "e-part-edge-not-in-host"};
        if (!e_set.insert(e).second) return {false, "e-part-duplicate"};
    }
    for (const Edge& e : eps.p_part) {
        if (e.u < 0 || e.v >= n || !host.has_edge(e.u, e.v)) return {false, "p-part-edge-not-in-host"};
        if (!p_set.insert(e).second) return {false, "p-part-duplicate"};
        if (e_set.count(e)) return {false, "parts-not-disjoint"};
    }
    std::vector<int> e_deg(n, 0), p_deg(n, 0);
    for (const Edge& e : e_set) {
        ++e_deg[e.u];
        ++e_deg[e.v];
    }
    for (const Edge& e : p_set) {
        ++p_deg[e.u];
        ++p_deg[e.v];
    }
    for (int v = 0; v < n; ++v) {
        if (e_deg[v] % 2 != 0) return {false, "e-part-odd-degree"};
        if (p_deg[v] > 2) return {false, "p-part-degree-over-two"};
    }
    Dsu forest(n);
    for (const Edge& e : p_set)
        if (!forest.unite(e.u, e.v)) return {false, "p-part-contains-cycle"};
    Dsu span(n);
    for (const Edge& e : e_set) span.unite(e.u, e.v);
    for (const Edge& e : p_set) span.unite(e.u, e.v);
    for (int v = 1; v < n; ++v)
        if (span.find(v) != span.find(0)) return {false, "union-not-spanning-connected"};
    return {true, ""};
}

std::vector<std::vector<int>> enumerate_cycles(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("enumerate_cycles: graph too large");
    std::vector<std::vector<int>> out;
    std::vector<char> used(n, 0);
    std::vector<int> path;
    std::function<void(int, int)> extend = [&](int root, int head) {
        for (int v : g.neighbors(head)) {
            if (v == root && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (v <= root || used[v]) continue;
            used[v] = 1;
            path.push_back(v);
            extend(root, v);
            path.pop_back();
            used[v] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        path = {root};
        used[root] = 1;
        extend(root, root);
        used[root] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

WMaximalResult find_w_maximal_cycle(const Graph& g, const std::vector<int>& w) {
    require_w(g, w, "find_w_maximal_cycle");
    if (w.size() != 5) throw std::invalid_argument("find_w_maximal_cycle: W must have five vertices");
    if (g.vertex_count() < 5) throw std::invalid_argument("find_w_maximal_cycle: need at least five vertices");
    if (!is_two_block(g)) throw std::invalid_argument("find_w_maximal_cycle: graph is not a 2-block");
    std::set<int> wset(w.begin(), w.end());
    WMaximalResult best;
    for (const auto& cyc : enumerate_cycles(g)) {
        int hits = 0;
        for (int v : cyc)
            if (wset.count(v)) ++hits;
        if (hits > best.hits) {
            best.hits = hits;
            best.cycle = cyc;
        }
    }
    return best;
}

namespace {

struct Chain {
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;
};

/// Components of g - V(K), each augmented by its attachment vertices on K and
/// the attaching edges.
std::vector<Chain> attachment_chains(const Graph& g, const std::vector<int>& k_cycle) {
    const int n = g.vertex_count();
    std::vector<char> on_k(n, 0);
    for (int v : k_cycle) on_k[v] = 1;
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (on_k[s] || comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = comps;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (!on_k[v] && comp[v] == -1) {
                    comp[v] = comps;
                    q.push(v);
                }
        }
        ++comps;
    }
    std::vector<Chain> out(comps);
    for (const Edge& e : g.edges()) {
        int cu = on_k[e.u] ? -1 : comp[e.u];
        int cv = on_k[e.v] ? -1 : comp[e.v];
        if (cu == -1 && cv == -1) continue;
        int c = cu == -1 ? cv : cu;
        if (cu != -1 && cv != -1 && cu != cv) continue;  // cannot happen
        out[c].edges.push_back(e);
    }
    for (Chain& c : out) {
        std::set<int> verts;
        for (const Edge& e : c.edges) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        c.vertices.assign(verts.begin(), verts.end());
    }
    return out;
}

///`seq` must appear in this cyclic order after `base`, before base recurs.
bool cyclic_subsequence_after(const std::vector<int>& k_cycle, int base, const std::vector<int>& seq) {
    const int m = static_cast<int>(k_cycle.size());
    int pos = -1;
    for (int i = 0; i < m; ++i)
        if (k_cycle[i] == base) pos = i;
    if (pos < 0) return false;
    for (int dir : {1, -1}) {
        size_t j = 0;
        for (int step = 1; step < m && j < seq.size(); ++step) {
            int v = k_cycle[((pos + dir * step) % m + m) % m];
            if (v == seq[j]) ++j;
        }
        if (j == seq.size()) return true;
    }
    return false;
}

/// Shortest path in the chain from `base` to any cycle vertex other than
/// base; ties resolved toward the lexicographically least vertex sequence.
std::vector<int> shortest_exit_path(const Graph& g, const Chain& chain, const std::vector<int>& k_cycle,
                                    int base) {
    std::set<int> kset(k_cycle.begin(), k_cycle.end());
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : chain.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    auto bfs = [&](const std::vector<int>& sources) {
        std::map<int, int> dist;
        std::queue<int> q;
        for (int s : sources) {
            dist[s] = 0;
            q.push(s);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (!dist.count(v)) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        return dist;
    };

    std::vector<int> targets;
    for (int v : chain.vertices)
        if (kset.count(v) && v != base) targets.push_back(v);
    if (targets.empty()) return {};
    std::map<int, int> from_base = bfs({base});
    int best = -1;
    for (int t : targets)
        if (from_base.count(t) && (best == -1 || from_base[t] < best)) best = from_base[t];
    if (best == -1) return {};
    std::vector<int> live_targets;
    for (int t : targets)
        if (from_base.count(t) && from_base[t] == best) live_targets.push_back(t);
    std::map<int, int> to_target = bfs(live_targets);

    std::vector<int> path = {base};
    int cur = base;
    for (int step = 1; step <= best; ++step) {
        int next = -1;
        for (int v : adj[cur]) {
            if (!from_base.count(v) || from_base[v] != step) continue;
            if (!to_target.count(v) || to_target[v] != best - step) continue;
            next = v;
            break;  // neighbors sorted: first hit is least
        }
        if (next == -1) return {};
        path.push_back(next);
        cur = next;
    }
    (void)g;
    return path;
}

}  // namespace

bool is_w_separated_ktok_blockchain(const Graph& g, const std::vector<int>& k_cycle,
                                    const std::vector<Edge>& p_edges, int x, const std::vector<int>& w) {
    require_cycle_of(g, k_cycle, "is_w_separated_ktok_blockchain");
    require_w(g, w, "is_w_separated_ktok_blockchain");
    if (p_edges.empty()) return false;
    std::set<int> verts;
    for (const Edge& e : p_edges) {
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
        verts.insert(e.u);
        verts.insert(e.v);
    }
    std::vector<int> vlist(verts.begin(), verts.end());
    std::vector<int> local_of(g.vertex_count(), -1);
    for (size_t i = 0; i < vlist.size(); ++i) local_of[vlist[i]] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    for (const Edge& e : p_edges) local_edges.emplace_back(local_of[e.u], local_of[e.v]);
    Graph p(static_cast<int>(vlist.size()), local_edges);
    if (!is_connected(p)) return false;
    auto chain = as_blockchain(p);
    if (!chain || chain->trivial) return false;

    std::set<int> kset(k_cycle.begin(), k_cycle.end());
    std::set<int> wset(w.begin(), w.end());

    bool w_cut = false;
    for (int c : chain->cutvertices) {
        if (wset.count(vlist[c])) w_cut = true;
        if (kset.count(vlist[c])) return false;  // no K-vertex may cut P
    }
    if (!w_cut) return false;

    auto k_inside = [&](const std::vector<int>& block) {
        std::vector<int> out;
        for (int v : block)
            if (kset.count(vlist[v])) out.push_back(vlist[v]);
        return out;
    };
    std::vector<int> k_first = k_inside(chain->blocks.front());
    std::vector<int> k_last = k_inside(chain->blocks.back());
    if (k_first.empty() || k_last.empty()) return false;

    std::vector<int> k_in_p;
    for (int v : vlist)
        if (kset.count(v)) k_in_p.push_back(v);

    auto base_side_ok = [&](const std::vector<int>& base_k, const std::vector<int>& far_block) {
        if (base_k.size() != 1 || base_k[0] != x) return false;
        std::set<int> far;
        for (int v : far_block) far.insert(vlist[v]);
        for (int v : k_in_p)
            if (v != x && !far.count(v)) return false;
        return true;
    };
    return base_side_ok(k_first, chain->blocks.back()) || base_side_ok(k_last, chain->blocks.front());
}

namespace {

SoundnessReport soundness_report(const Graph& g, const std::vector<int>& k_cycle, const std::vector<int>& w,
                                 int max_hits) {
    SoundnessReport rep;
    rep.cycle = k_cycle;
    rep.w = w;
    std::sort(rep.w.begin(), rep.w.end());
    std::set<int> wset(w.begin(), w.end());
    for (int v : k_cycle)
        if (wset.count(v)) ++rep.hits;
    rep.maximal = rep.hits == max_hits;
    if (!rep.maximal) {
        rep.sound = false;
        return rep;
    }
    if (rep.hits >= 4) {
        rep.sound = true;
        return rep;
    }

    std::set<int> kset(k_cycle.begin(), k_cycle.end());
    std::vector<Chain> chains = attachment_chains(g, k_cycle);

    auto separated_based_at = [&](int base) {
        std::vector<std::pair<Chain, std::vector<int>>> out;
        for (const Chain& c : chains) {
            if (!std::binary_search(c.vertices.begin(), c.vertices.end(), base)) continue;
            if (!is_w_separated_ktok_blockchain(g, k_cycle, c.edges, base, w)) continue;
            std::vector<int> path = shortest_exit_path(g, c, k_cycle, base);
            if (path.empty()) continue;
            out.emplace_back(c, path);
        }
        return out;
    };
    auto chains_meet_only_at = [](const Chain& a, const Chain& b, int base) {
        std::vector<int> inter;
        std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                              std::back_inserter(inter));
        return inter.size() == 1 && inter[0] == base;
    };
    auto evidence_chain = [](const Chain& c, int base, const std::vector<int>& path) {
        SeparatedChain sc;
        sc.vertices = c.vertices;
        sc.edges = c.edges;
        sc.base = base;
        sc.shortest_path = path;
        return sc;
    };

    if (rep.hits == 3) {
        std::vector<int> w_on_k;
        for (int v : k_cycle)
            if (wset.count(v)) w_on_k.push_back(v);
        std::sort(w_on_k.begin(), w_on_k.end());
        for (int base : w_on_k) {
            auto cand = separated_based_at(base);
            std::vector<int> others;
            for (int v : w_on_k)
                if (v != base) others.push_back(v);
            for (size_t i = 0; i < cand.size(); ++i)
                for (size_t j = i + 1; j < cand.size(); ++j) {
                    if (!chains_meet_only_at(cand[i].first, cand[j].first, base)) continue;
                    for (int swap_pq = 0; swap_pq < 2; ++swap_pq)
                        for (int swap_w = 0; swap_w < 2; ++swap_w) {
                            int lp = cand[swap_pq ? j : i].second.back();
                            int lq = cand[swap_pq ? i : j].second.back();
                            int wa = others[swap_w];
                            int wb = others[1 - swap_w];
                            if (cyclic_subsequence_after(k_cycle, base, {wa, lp, lq, wb})) {
                                AttachmentEvidence ev;
                                ev.base = base;
                                ev.chains = {evidence_chain(cand[swap_pq ? j : i].first, base,
                                                            cand[swap_pq ? j : i].second),
                                             evidence_chain(cand[swap_pq ? i : j].first, base,
                                                            cand[swap_pq ? i : j].second)};
                                ev.subsequence = {base, wa, lp, lq, wb};
                                rep.clause2_evidence = ev;
                                rep.sound = false;
                                return rep;
                            }
                        }
                }
        }
        rep.sound = true;
        return rep;
    }

    if (rep.hits == 2) {
        std::vector<int> w_on_k;
        for (int v : k_cycle)
            if (wset.count(v)) w_on_k.push_back(v);
        std::sort(w_on_k.begin(), w_on_k.end());
        for (int base : k_cycle) {
            if (wset.count(base)) continue;
            auto cand = separated_based_at(base);
            if (cand.size() < 3) continue;
            std::vector<size_t> idx(cand.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<size_t> pick(3);
            std::function<bool(size_t, int)> choose = [&](size_t from, int got) -> bool {
                if (got == 3) {
                    for (int a = 0; a < 3; ++a)
                        for (int b = a + 1; b < 3; ++b)
                            if (!chains_meet_only_at(cand[pick[a]].first, cand[pick[b]].first, base)) return false;
                    std::array<int, 3> perm = {0, 1, 2};
                    std::sort(perm.begin(), perm.end());
                    do {
                        for (int swap_w = 0; swap_w < 2; ++swap_w) {
                            int wa = w_on_k[swap_w];
                            int wb = w_on_k[1 - swap_w];
                            std::vector<int> seq = {wa, cand[pick[perm[0]]].second.back(),
                                                    cand[pick[perm[1]]].second.back(),
                                                    cand[pick[perm[2]]].second.back(), wb};
                            if (cyclic_subsequence_after(k_cycle, base, seq)) {
                                AttachmentEvidence ev;
                                ev.base = base;
                                for (int t = 0; t < 3; ++t)
                                    ev.chains.push_back(
                                        evidence_chain(cand[pick[t]].first, base, cand[pick[t]].second));
                                ev.subsequence = {base, seq[0], seq[1], seq[2], seq[3], seq[4]};
                                rep.clause3_evidence = ev;
                                return true;
                            }
                        }
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    return false;
                }
                for (size_t i = from; i < cand.size(); ++i) {
                    pick[got] = i;
                    if (choose(i + 1, got + 1)) return true;
                }
                return false;
            };
            if (choose(0, 0)) {
                rep.sound = false;
                return rep;
            }
        }
        rep.sound = true;
        return rep;
    }

    rep.sound = false;  // one or zero touched vertices satisfies no clause
    return rep;
}

int max_w_hits(const std::vector<std::vector<int>>& cycles, const std::set<int>& wset) {
    int best = 0;
    for (const auto& cyc : cycles) {
        int hits = 0;
        for (int v : cyc)
            if (wset.count(v)) ++hits;
        best = std::max(best, hits);
    }
    return best;
}

}  // namespace

SoundnessReport is_w_sound(const Graph& g, const std::vector<int>& k_cycle, const std::vector<int>& w) {
    if (w.size() != 5) throw std::invalid_argument("is_w_sound: W must have five vertices");
    require_w(g, w, "is_w_sound");
    require_cycle_of(g, k_cycle, "is_w_sound");
    std::set<int> wset(w.begin(), w.end());
    return soundness_report(g, k_cycle, w, max_w_hits(enumerate_cycles(g), wset));
}

std::optional<SoundnessReport> find_w_sound_cycle(const Graph& g, const std::vector<int>& w) {
    if (w.size() != 5) throw std::invalid_argument("find_w_sound_cycle: W must have five vertices");
    require_w(g, w, "find_w_sound_cycle");
    if (g.vertex_count() < 5) throw std::invalid_argument("find_w_sound_cycle: need at least five vertices");
    if (!is_two_block(g)) throw std::invalid_argument("find_w_sound_cycle: graph is not a 2-block");
    std::set<int> wset(w.begin(), w.end());
    std::vector<std::vector<int>> cycles = enumerate_cycles(g);
    const int best = max_w_hits(cycles, wset);
    for (const auto& cyc : cycles) {
        int hits = 0;
        for (int v : cyc)
            if (wset.count(v)) ++hits;
        if (hits != best) continue;
        SoundnessReport rep = soundness_report(g, cyc, w, best);
        if (rep.sound) return rep;
    }
    return std::nullopt;
}

std::optional<EpsGraph> find_eps_with_sound_cycle(const Graph& g, const std::vector<int>& k_cycle,
                                                  const std::vector<int>& w) {
    require_cycle_of(g, k_cycle, "find_eps_with_sound_cycle");
    require_w(g, w, "find_eps_with_sound_cycle");
    const int n = g.vertex_count();

    std::vector<Edge> all = g.edges();
    std::set<Edge> k_set;
    for (const Edge& e : cycle_edges(k_cycle)) k_set.insert(e);
    std::vector<Edge> rest;
    for (const Edge& e : all)
        if (!k_set.count(e)) rest.push_back(e);
    const int m_rest = static_cast<int>(rest.size());
    if (m_rest > 40) throw std::invalid_argument("find_eps_with_sound_cycle: graph too large for complete search");

    // Fundamental-cycle basis of the non-cycle edges.
    std::vector<std::vector<std::pair<int, int>>> tree_adj(n);  // (vertex, rest index)
    std::vector<char> in_tree(m_rest, 0);
    {
        Dsu dsu(n);
        for (int i = 0; i < m_rest; ++i)
            if (dsu.unite(rest[i].u, rest[i].v)) {
                in_tree[i] = 1;
                tree_adj[rest[i].u].emplace_back(rest[i].v, i);
                tree_adj[rest[i].v].emplace_back(rest[i].u, i);
            }
    }
    std::vector<std::uint64_t> basis;
    for (int i = 0; i < m_rest; ++i) {
        if (in_tree[i]) continue;
        // Tree path from rest[i].u to rest[i].v.
        std::vector<int> parent(n, -1), via(n, -1);
        std::queue<int> q;
        q.push(rest[i].u);
        parent[rest[i].u] = rest[i].u;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, idx] : tree_adj[u])
                if (parent[v] == -1) {
                    parent[v] = u;
                    via[v] = idx;
                    q.push(v);
                }
        }
        std::uint64_t mask = std::uint64_t{1} << i;
        for (int v = rest[i].v; v != rest[i].u; v = parent[v]) mask ^= std::uint64_t{1} << via[v];
        basis.push_back(mask);
    }
    if (basis.size() > 22)
        throw std::invalid_argument("find_eps_with_sound_cycle: cycle space too large for complete search");

    std::vector<std::uint64_t> selectors(std::uint64_t{1} << basis.size());
    std::iota(selectors.begin(), selectors.end(), 0);
    std::stable_sort(selectors.begin(), selectors.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

    std::vector<int> cap(n, 2);
    for (int v : w) cap[v] = 1;

    for (std::uint64_t sel : selectors) {
        std::uint64_t t_mask = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if ((sel >> i) & 1) t_mask ^= basis[i];

        Dsu comps(n);
        for (const Edge& e : k_set) comps.unite(e.u, e.v);
        for (int i = 0; i < m_rest; ++i)
            if ((t_mask >> i) & 1) comps.unite(rest[i].u, rest[i].v);

        std::vector<int> avail;
        for (int i = 0; i < m_rest; ++i)
            if (!((t_mask >> i) & 1)) avail.push_back(i);

        // Connect the components with a degree-capped forest.
        std::vector<int> p_deg(n, 0);
        std::vector<int> chosen;
        std::function<bool(Dsu&)> connect = [&](Dsu& dsu) -> bool {
            int pivot = -1;
            for (int v = 0; v < n && pivot == -1; ++v)
                if (dsu.find(v) != dsu.find(0)) pivot = dsu.find(v);
            if (pivot == -1) return true;
            for (int i : avail) {
                const Edge& e = rest[i];
                if (p_deg[e.u] >= cap[e.u] || p_deg[e.v] >= cap[e.v]) continue;
                if (std::count(chosen.begin(), chosen.end(), i)) continue;
                int ru = dsu.find(e.u), rv = dsu.find(e.v);
                if (ru == rv) continue;
                if (ru != pivot && rv != pivot) continue;
                Dsu next = dsu;
                next.unite(e.u, e.v);
                ++p_deg[e.u];
                ++p_deg[e.v];
                chosen.push_back(i);
                if (connect(next)) return true;
                chosen.pop_back();
                --p_deg[e.u];
                --p_deg[e.v];
            }
            return false;
        };
        if (!connect(comps)) continue;

        EpsGraph eps;
        eps.e_part.assign(k_set.begin(), k_set.end());
        for (int i = 0; i < m_rest; ++i)
            if ((t_mask >> i) & 1) eps.e_part.push_back(rest[i]);
        for (int i : chosen) eps.p_part.push_back(rest[i]);
        std::sort(eps.e_part.begin(), eps.e_part.end());
        std::sort(eps.p_part.begin(), eps.p_part.end());
        if (auto check = validate_eps(g, eps); !check)
            throw std::logic_error("find_eps_with_sound_cycle: internal result failed validation: " + check.reason);
        return eps;
    }
    return std::nullopt;
}

}  // namespace hamsq
