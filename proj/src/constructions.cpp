#include "hamsq/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hamsq/ham_oracle.hpp"

namespace hamsq {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Local injective edge assignment; slots with a forced candidate keep it.
bool assign_witness_edges(const std::vector<std::vector<Edge>>& cands, std::vector<Edge>* out) {
    std::vector<Edge> pool;
    for (const auto& c : cands)
        for (const Edge& e : c)
            if (!std::count(pool.begin(), pool.end(), e)) pool.push_back(e);
    std::sort(pool.begin(), pool.end());
    std::vector<int> owner(pool.size(), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int slot) -> bool {
        for (const Edge& e : cands[slot]) {
            size_t idx = std::lower_bound(pool.begin(), pool.end(), e) - pool.begin();
            if (seen[idx]) continue;
            seen[idx] = 1;
            if (owner[idx] == -1 || augment(owner[idx])) {
                owner[idx] = slot;
                return true;
            }
        }
        return false;
    };
    for (size_t slot = 0; slot < cands.size(); ++slot) {
        seen.assign(pool.size(), 0);
        if (!augment(static_cast<int>(slot))) return false;
    }
    if (out) {
        out->assign(cands.size(), Edge());
        for (size_t idx = 0; idx < pool.size(); ++idx)
            if (owner[idx] != -1) (*out)[owner[idx]] = pool[idx];
    }
    return true;
}

}  // namespace

Graph merge_at(const Graph& a, int va, const Graph& b, int vb, std::vector<int>* b_map) {
    if (va < 0 || va >= a.vertex_count()) throw std::invalid_argument("merge_at: bad vertex in host");
    if (vb < 0 || vb >= b.vertex_count()) throw std::invalid_argument("merge_at: bad vertex in attachment");
    std::vector<int> map(b.vertex_count(), -1);
    int next = a.vertex_count();
    for (int v = 0; v < b.vertex_count(); ++v) map[v] = (v == vb) ? va : next++;
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.emplace_back(map[e.u], map[e.v]);
    if (b_map) *b_map = map;
    return Graph(next, edges);
}

Graph chain_blocks(const std::vector<Graph>& blocks, const std::vector<std::pair<int, int>>& attach,
                   std::vector<std::vector<int>>* maps) {
    if (blocks.empty()) throw std::invalid_argument("chain_blocks: no blocks");
    if (attach.size() + 1 != blocks.size()) throw std::invalid_argument("chain_blocks: attachment count mismatch");
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        if (blocks[i + 1].vertex_count() < 2) throw std::invalid_argument("chain_blocks: block too small");
        if (i + 1 < attach.size() && attach[i].second == attach[i + 1].first)
            throw std::invalid_argument("chain_blocks: inner block entry equals exit");
    }
    Graph g = blocks[0];
    std::vector<std::vector<int>> all_maps;
    std::vector<int> id(blocks[0].vertex_count());
    for (size_t v = 0; v < id.size(); ++v) id[v] = static_cast<int>(v);
    all_maps.push_back(id);
    for (size_t i = 1; i < blocks.size(); ++i) {
        int host_vertex = all_maps[i - 1][attach[i - 1].first];
        std::vector<int> bmap;
        g = merge_at(g, host_vertex, blocks[i], attach[i - 1].second, &bmap);
        all_maps.push_back(bmap);
    }
    if (maps) *maps = all_maps;
    return g;
}

Certificate blockchain_path(const Graph& g, int c0, int ck, const std::vector<BlockWitnessRequest>& want) {
    auto chain = as_blockchain(g);
    if (!chain || chain->trivial) throw std::invalid_argument("blockchain_path: graph is not a non-trivial blockchain");
    const size_t k = chain->blocks.size();
    if (want.size() != k) throw std::invalid_argument("blockchain_path: one witness request per block expected");
    std::set<int> cuts(chain->cutvertices.begin(), chain->cutvertices.end());
    if (!contains(chain->blocks.front(), c0) || cuts.count(c0))
        throw std::invalid_argument("blockchain_path: c0 must be a non-cutvertex of the first block");
    if (!contains(chain->blocks.back(), ck) || cuts.count(ck))
        throw std::invalid_argument("blockchain_path: ck must be a non-cutvertex of the last block");

    std::vector<int> order;
    std::vector<std::pair<int, Edge>> witnesses;
    std::vector<int> required;

    for (size_t i = 0; i < k; ++i) {
        const std::vector<int>& block = chain->blocks[i];
        const int from = (i == 0) ? c0 : chain->cutvertices[i - 1];
        const int to = (i + 1 == k) ? ck : chain->cutvertices[i];
        const auto& req = want[i];

        if (req.u) {
            int u = *req.u;
            if (!contains(block, u)) throw std::invalid_argument("blockchain_path: u outside its block");
            if (cuts.count(u)) throw std::invalid_argument("blockchain_path: u must not be a cutvertex");
            if ((i == 0 && u == c0) || (i + 1 == k && u == ck))
                throw std::invalid_argument("blockchain_path: u must differ from the outer endpoints");
            if (!req.v) throw std::invalid_argument("blockchain_path: u requires a partner v");
            if (*req.v == u) throw std::invalid_argument("blockchain_path: u and v must differ");
        }
        if (req.v && !contains(block, *req.v)) throw std::invalid_argument("blockchain_path: v outside its block");

        std::vector<int> block_order;
        std::vector<std::pair<int, Edge>> block_witnesses;

        if (block.size() == 2) {
            if (req.u) throw std::invalid_argument("blockchain_path: bridge block admits no u");
            block_order = {from, to};
            if (req.v) {
                if (*req.v != from && *req.v != to)
                    throw std::invalid_argument("blockchain_path: bridge witness must be an endpoint");
                block_witnesses.emplace_back(*req.v, Edge(from, to));
                required.push_back(*req.v);
            }
        } else {
            if (req.v && !req.u) throw std::invalid_argument("blockchain_path: v requires a partner u");
            auto sub = induced_subgraph(g, block);
            const int lf = sub.old_to_new[from];
            const int lt = sub.old_to_new[to];
            SearchOptions opts;
            opts.lex_min = true;
            SearchResult res;
            if (!req.u) {
                ConstraintSpec spec;
                spec.kind = CertKind::path;
                spec.endpoints = {{lf, lt}};
                res = solve(sub.graph, spec, opts);
            } else if (*req.v != from && *req.v != to) {
                res = find_f_path(sub.graph, lf, lt, {sub.old_to_new[*req.u], sub.old_to_new[*req.v]}, opts);
            } else {
                res = find_strong_f3_path(sub.graph, lf, lt, sub.old_to_new[*req.u], *req.v == from ? 1 : 2, opts);
            }
            if (res.status != SearchStatus::found)
                throw finding_error("blockchain_path: block-level path search failed");
            Certificate local = translate_certificate(*res.certificate, sub.new_to_old);
            block_order = local.order;
            block_witnesses = local.witnesses;
            if (req.u) {
                required.push_back(*req.u);
                required.push_back(*req.v);
            }
        }

        if (block_order.front() != from) throw std::logic_error("blockchain_path: block path misoriented");
        if (order.empty())
            order = block_order;
        else
            order.insert(order.end(), block_order.begin() + 1, block_order.end());
        witnesses.insert(witnesses.end(), block_witnesses.begin(), block_witnesses.end());
    }

    Certificate cert;
    cert.kind = CertKind::path;
    cert.order = order;
    cert.witnesses = witnesses;
    cert = canonical_certificate(cert);

    ConstraintSpec spec;
    spec.kind = CertKind::path;
    spec.endpoints = {{c0, ck}};
    spec.witness_vertices = required;
    if (auto check = check_certificate(g, spec, cert); !check)
        throw std::logic_error("blockchain_path: assembled certificate failed validation: " + check.reason);
    return cert;
}

EndblockReduction replace_endblock_with_path(const Graph& g, const std::vector<int>& endblock, int x, int y) {
    std::vector<int> block = endblock;
    std::sort(block.begin(), block.end());
    if (block.size() == 3) throw std::invalid_argument("replace_endblock_with_path: endblock is a triangle");
    if (block.size() < 4) throw std::invalid_argument("replace_endblock_with_path: endblock too small");
    if (!contains(block, x) || !contains(block, y) || x == y)
        throw std::invalid_argument("replace_endblock_with_path: bad attachment vertices");
    {
        auto sub = induced_subgraph(g, block);
        if (!is_two_block(sub.graph)) throw std::invalid_argument("replace_endblock_with_path: endblock is not a 2-block");
    }
    int x_prime = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(block, v)) continue;
        for (int w : g.neighbors(v)) {
            if (w == x) {
                if (x_prime != -1) throw std::invalid_argument("replace_endblock_with_path: x has several outside edges");
                x_prime = v;
            } else if (contains(block, w) && w != y) {
                throw std::invalid_argument("replace_endblock_with_path: endblock leaks besides x and y");
            }
        }
    }
    if (x_prime == -1) throw std::invalid_argument("replace_endblock_with_path: x has no outside edge");

    EndblockReduction red;
    red.endblock = block;
    const int n = g.vertex_count();
    red.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (contains(block, v) && v != x && v != y) continue;
        red.old_to_new[v] = static_cast<int>(red.new_to_old.size());
        red.new_to_old.push_back(v);
    }
    const int a = static_cast<int>(red.new_to_old.size());
    const int b = a + 1;
    red.new_to_old.push_back(-1);
    red.new_to_old.push_back(-1);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (contains(block, e.u) && contains(block, e.v)) continue;  // all block edges go
        if (red.old_to_new[e.u] < 0 || red.old_to_new[e.v] < 0) continue;
        edges.emplace_back(red.old_to_new[e.u], red.old_to_new[e.v]);
    }
    edges.emplace_back(red.old_to_new[x], a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, red.old_to_new[y]);
    red.reduced = Graph(b + 1, edges);

    red.anchors.x_prime = red.old_to_new[x_prime];
    red.anchors.x = red.old_to_new[x];
    red.anchors.a = a;
    red.anchors.b = b;
    red.anchors.y = red.old_to_new[y];

    const int before = g.vertex_count() + g.edge_count();
    const int after = red.reduced.vertex_count() + red.reduced.edge_count();
    if (after >= before) throw std::logic_error("replace_endblock_with_path: reduction did not shrink the graph");
    return red;
}

namespace {

struct OrientedCycle {
    std::vector<int> cyc;
    int size() const { return static_cast<int>(cyc.size()); }
    int at(int i) const { return cyc[((i % size()) + size()) % size()]; }
    int find(int v) const {
        for (int i = 0; i < size(); ++i)
            if (cyc[i] == v) return i;
        return -1;
    }
};

/// Rotates/orients the cycle so that the consecutive run `pattern` starts at
/// index 0; returns false if the run appears in neither orientation.
bool orient_to_pattern(OrientedCycle& oc, const std::vector<int>& pattern) {
    for (int dir : {1, -1}) {
        for (int s = 0; s < oc.size(); ++s) {
            bool ok = true;
            for (size_t j = 0; j < pattern.size() && ok; ++j)
                if (oc.at(s + dir * static_cast<int>(j)) != pattern[j]) ok = false;
            if (ok) {
                std::vector<int> rot;
                for (int i = 0; i < oc.size(); ++i) rot.push_back(oc.at(s + dir * i));
                oc.cyc = rot;
                return true;
            }
        }
    }
    return false;
}

std::array<int, 2> cycle_neighbors(const OrientedCycle& oc, int v) {
    int p = oc.find(v);
    return {oc.at(p - 1), oc.at(p + 1)};
}

}  // namespace

TraversalClass classify_traversal(const Certificate& h1, const SurgeryAnchors& anchors) {
    TraversalClass out;
    out.anchors = anchors;
    if (h1.kind != CertKind::cycle) return out;
    OrientedCycle oc{h1.order};
    const int a = anchors.a, b = anchors.b, x = anchors.x, y = anchors.y, xp = anchors.x_prime;
    if (oc.find(a) < 0 || oc.find(b) < 0) return out;

    auto na = cycle_neighbors(oc, a);
    auto nb = cycle_neighbors(oc, b);
    const bool ab_adjacent = na[0] == b || na[1] == b;

    auto other = [](const std::array<int, 2>& nbrs, int skip) { return nbrs[0] == skip ? nbrs[1] : nbrs[0]; };

    if (ab_adjacent) {
        const int pa = other(na, b);
        const int pb = other(nb, a);
        if (pa == x && pb == y) {
            out.kind = SurgeryCase::case1;
            return out;
        }
        if (pa == x && pb != y) {
            out.kind = SurgeryCase::case2;
            out.anchors.y_prime = pb;
            return out;
        }
        if (pa == xp && pb == x) {
            out.kind = SurgeryCase::case5;
            return out;
        }
        return out;
    }

    const bool a_between_xp_y = (na[0] == xp && na[1] == y) || (na[0] == y && na[1] == xp);
    if (a_between_xp_y) {
        const bool b_between_y_x = (nb[0] == y && nb[1] == x) || (nb[0] == x && nb[1] == y);
        if (b_between_y_x) {
            out.kind = SurgeryCase::case9;
            return out;
        }
        if (nb[0] == x || nb[1] == x) {
            out.kind = SurgeryCase::case7;
            out.anchors.y_prime = other(nb, x);
            return out;
        }
    }
    return out;
}

namespace {

/// Strong path for cases 1 and 2: x..y hamiltonian path of the endblock
/// square whose terminal edge at y lies in the block.
Certificate endblock_strong_path(const Graph& block, int x_loc, int y_loc) {
    int third = -1;
    for (int v = 0; v < block.vertex_count(); ++v)
        if (v != x_loc && v != y_loc) {
            third = v;
            break;
        }
    SearchOptions opts;
    opts.lex_min = true;
    SearchResult res = find_strong_f3_path(block, x_loc, y_loc, third, 2, opts);
    if (res.status != SearchStatus::found) throw finding_error("endblock surgery: strong path search failed");
    return *res.certificate;
}

/// Anchored cycle for cases 5, 7, 9: both edges at y in the block, one edge
/// at x in the block with its far end away from y so the splice can cut it.
Certificate endblock_anchored_cycle(const Graph& block, int x_loc, int y_loc) {
    SearchOptions opts;
    opts.lex_min = true;
    opts.accept = [&](const Certificate& cert) {
        OrientedCycle oc{cert.order};
        for (int t : cycle_neighbors(oc, x_loc))
            if (t != y_loc && block.has_edge(x_loc, t)) return true;
        return false;
    };
    SearchResult res = find_thm3_cycle(block, y_loc, x_loc, opts);
    if (res.status != SearchStatus::found) throw finding_error("endblock surgery: anchored cycle search failed");
    return *res.certificate;
}

int usable_x_star(const Graph& block, const OrientedCycle& hb, int x_loc, int y_loc) {
    int best = -1;
    for (int t : cycle_neighbors(hb, x_loc))
        if (t != y_loc && block.has_edge(x_loc, t) && (best == -1 || t < best)) best = t;
    return best;
}

}  // namespace

ExtensionResult extend_cycle_through_endblock(const Graph& g, const EndblockReduction& red,
                                              const Certificate& h1, const TraversalClass& cls) {
    const SurgeryAnchors& an = cls.anchors;
    // Host-side witness vertices of h1; a and b may never carry witnesses.
    std::vector<int> host_x;
    for (const auto& [v, e] : h1.witnesses) {
        (void)e;
        if (red.new_to_old[v] < 0)
            throw std::invalid_argument("extend_cycle_through_endblock: witness on a substitute vertex");
        host_x.push_back(red.new_to_old[v]);
    }

    if (cls.kind == SurgeryCase::unreduced) {
        SearchResult direct = find_h_cycle(g, host_x);
        if (direct.status != SearchStatus::found)
            throw finding_error("extend_cycle_through_endblock: direct search failed on host");
        return {*direct.certificate, true};
    }

    auto sub = induced_subgraph(g, red.endblock);
    const int x_host = red.new_to_old[an.x];
    const int y_host = red.new_to_old[an.y];
    const int x_loc = sub.old_to_new[x_host];
    const int y_loc = sub.old_to_new[y_host];

    OrientedCycle oc{h1.order};
    std::vector<int> new_order;  // host ids
    auto host = [&](int reduced_id) { return red.new_to_old[reduced_id]; };
    auto append_tail = [&](const OrientedCycle& c, int from, int count) {
        for (int i = 0; i < count; ++i) new_order.push_back(host(c.at(from + i)));
    };

    if (cls.kind == SurgeryCase::case1 || cls.kind == SurgeryCase::case2) {
        Certificate p = endblock_strong_path(sub.graph, x_loc, y_loc);
        std::vector<int> p_host;
        for (int v : p.order) p_host.push_back(sub.new_to_old[v]);
        if (cls.kind == SurgeryCase::case1) {
            if (!orient_to_pattern(oc, {an.x, an.a, an.b, an.y}))
                throw std::invalid_argument("extend_cycle_through_endblock: cycle does not match case 1");
            new_order = p_host;  // x .. y
            append_tail(oc, 4, oc.size() - 4);
        } else {
            if (!orient_to_pattern(oc, {an.x, an.a, an.b, an.y_prime}))
                throw std::invalid_argument("extend_cycle_through_endblock: cycle does not match case 2");
            new_order.assign(p_host.begin(), p_host.end() - 1);  // x .. y*, dropping y
            append_tail(oc, 3, oc.size() - 3);                   // y', rest (y stays where it was)
        }
    } else {
        Certificate hb = endblock_anchored_cycle(sub.graph, x_loc, y_loc);
        std::vector<int> hb_host;
        for (int v : hb.order) hb_host.push_back(sub.new_to_old[v]);
        OrientedCycle hbo{hb_host};
        const int x_star = usable_x_star(sub.graph, hbo, x_host, y_host);
        if (x_star < 0) throw std::logic_error("extend_cycle_through_endblock: anchored cycle lost its usable edge");

        // Path from x_star the long way around to x, cutting the x..x_star
        // edge; case 5 first drops y and reconnects its two neighbors.
        auto long_way = [&](bool without_y) {
            std::vector<int> ring;
            for (int v : hb_host)
                if (!without_y || v != y_host) ring.push_back(v);
            OrientedCycle rc{ring};
            if (!orient_to_pattern(rc, {x_star, x_host}))
                throw std::logic_error("extend_cycle_through_endblock: x_star edge missing from block cycle");
            std::vector<int> path;
            path.push_back(rc.at(0));  // x_star
            for (int i = rc.size() - 1; i >= 1; --i) path.push_back(rc.at(i));
            return path;  // x_star, .., x
        };

        if (cls.kind == SurgeryCase::case5) {
            if (!orient_to_pattern(oc, {an.x_prime, an.a, an.b, an.x}))
                throw std::invalid_argument("extend_cycle_through_endblock: cycle does not match case 5");
            new_order.push_back(host(an.x_prime));
            for (int v : long_way(true)) new_order.push_back(v);
            append_tail(oc, 4, oc.size() - 4);
        } else if (cls.kind == SurgeryCase::case9) {
            if (!orient_to_pattern(oc, {an.x_prime, an.a, an.y, an.b, an.x}))
                throw std::invalid_argument("extend_cycle_through_endblock: cycle does not match case 9");
            new_order.push_back(host(an.x_prime));
            for (int v : long_way(false)) new_order.push_back(v);
            append_tail(oc, 5, oc.size() - 5);
        } else {  // case 7
            if (!orient_to_pattern(oc, {an.x_prime, an.a, an.y}))
                throw std::invalid_argument("extend_cycle_through_endblock: cycle does not match case 7");
            // Walk the block cycle from x away from x_star; y splits the walk
            // into p2 = x..t and p1 = y..x_star.
            if (!orient_to_pattern(hbo, {x_host, x_star}))
                throw std::logic_error("extend_cycle_through_endblock: x_star edge missing from block cycle");
            std::vector<int> walk;
            walk.push_back(hbo.at(0));  // x
            for (int i = hbo.size() - 1; i >= 1; --i) walk.push_back(hbo.at(i));
            auto y_it = std::find(walk.begin(), walk.end(), y_host);
            if (y_it == walk.end()) throw std::logic_error("extend_cycle_through_endblock: y missing from block cycle");
            std::vector<int> p2(walk.begin(), y_it);  // x .. t (possibly just x)
            std::vector<int> p1(y_it, walk.end());    // y, .., x_star

            const int pb = oc.find(an.b);
            new_order.push_back(host(an.x_prime));
            for (auto it = p1.rbegin(); it != p1.rend(); ++it) new_order.push_back(*it);  // x_star .. y
            for (int idx = 3; idx <= pb - 2; ++idx) new_order.push_back(host(oc.at(idx)));
            if (oc.at(pb - 1) == an.y_prime) {
                // .., y', b, x, .. becomes .., y', t, .., x, ..
                new_order.push_back(host(an.y_prime));
                for (auto it = p2.rbegin(); it != p2.rend(); ++it) new_order.push_back(*it);
                for (int idx = pb + 2; idx < oc.size(); ++idx) new_order.push_back(host(oc.at(idx)));
            } else {
                // .., x, b, y', .. becomes .., x, .., t, y', ..
                for (int v : p2) new_order.push_back(v);
                for (int idx = pb + 1; idx < oc.size(); ++idx) new_order.push_back(host(oc.at(idx)));
            }
        }
    }

    // Witness repair: keep every witness edge that survived verbatim; broken
    // ones are reassigned among base edges of the new cycle at their vertex.
    OrientedCycle final_cycle{new_order};
    std::set<Edge> on_cycle;
    for (int i = 0; i < final_cycle.size(); ++i) on_cycle.insert(Edge(final_cycle.at(i), final_cycle.at(i + 1)));

    std::vector<std::vector<Edge>> cands;
    for (const auto& [v, e] : h1.witnesses) {
        const int vh = red.new_to_old[v];
        std::vector<Edge> c;
        if (red.new_to_old[e.u] >= 0 && red.new_to_old[e.v] >= 0) {
            Edge eh(red.new_to_old[e.u], red.new_to_old[e.v]);
            if (on_cycle.count(eh) && g.has_edge(eh.u, eh.v)) c.push_back(eh);
        }
        if (c.empty()) {
            for (int t : cycle_neighbors(final_cycle, vh))
                if (g.has_edge(vh, t)) c.emplace_back(vh, t);
            std::sort(c.begin(), c.end());
        }
        cands.push_back(std::move(c));
    }
    std::vector<Edge> assigned;
    if (!assign_witness_edges(cands, &assigned)) {
        SearchResult direct = find_h_cycle(g, host_x);
        if (direct.status != SearchStatus::found)
            throw finding_error("extend_cycle_through_endblock: witness repair and direct search both failed");
        return {*direct.certificate, true};
    }

    Certificate cert;
    cert.kind = CertKind::cycle;
    cert.order = new_order;
    for (size_t i = 0; i < host_x.size(); ++i) cert.witnesses.emplace_back(host_x[i], assigned[i]);
    cert = canonical_certificate(cert);

    ConstraintSpec spec;
    spec.kind = CertKind::cycle;
    spec.witness_vertices = host_x;
    if (auto check = check_certificate(g, spec, cert); !check)
        throw std::logic_error("extend_cycle_through_endblock: spliced certificate failed validation: " + check.reason);
    return {cert, false};
}

CounterexampleFamily build_h5_counterexample(const Graph& base, int x1, int x2, int t) {
    if (t < 3) throw std::invalid_argument("build_h5_counterexample: need t >= 3");
    if (x1 == x2) throw std::invalid_argument("build_h5_counterexample: attachment vertices must differ");
    if (x1 < 0 || x2 < 0 || x1 >= base.vertex_count() || x2 >= base.vertex_count())
        throw std::invalid_argument("build_h5_counterexample: attachment vertex out of range");
    if (!is_two_block(base)) throw std::invalid_argument("build_h5_counterexample: base is not a 2-block");

    CounterexampleFamily fam;
    fam.base = base;
    fam.x1 = x1;
    fam.x2 = x2;
    fam.t = t;
    std::vector<Edge> cross;
    const int n = base.vertex_count();
    for (int j = 0; j < t; ++j) {
        fam.added.push_back(n + j);
        cross.emplace_back(x1, n + j);
        cross.emplace_back(x2, n + j);
    }
    fam.result = disjoint_union_with_cross_edges(base, t, cross);
    return fam;
}

std::vector<int> h5_query_set(const CounterexampleFamily& fam) {
    return {fam.x1, fam.x2, fam.added[0], fam.added[1], fam.added[2]};
}

bool degree_obstruction_holds(const CounterexampleFamily& fam) {
    for (int j = 0; j < 3; ++j) {
        const std::vector<int>& nb = fam.result.neighbors(fam.added[j]);
        std::vector<int> expect = {std::min(fam.x1, fam.x2), std::max(fam.x1, fam.x2)};
        if (nb != expect) return false;
    }
    // Five pairwise distinct cycle edges would all have to touch {x1, x2}:
    // three forced through the y's plus one own witness at each x_i. A cycle
    // carries at most four distinct edges at two vertices.
    const int needed = 3 + 2;
    const int capacity = 4;
    return needed > capacity;
}

}  // namespace hamsq
