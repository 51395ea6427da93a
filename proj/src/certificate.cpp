#include "hamsq/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hamsq {

namespace {

bool within_distance_two(const Graph& g, int u, int v) {
    if (g.has_edge(u, v)) return true;
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) return true;
        (nu[i] < nv[j]) ? ++i : ++j;
    }
    return false;
}

std::vector<Edge> route_edges(const Certificate& cert) {
    std::vector<Edge> out;
    for (size_t i = 0; i + 1 < cert.order.size(); ++i) out.emplace_back(cert.order[i], cert.order[i + 1]);
    if (cert.kind == CertKind::cycle && cert.order.size() >= 3)
        out.emplace_back(cert.order.back(), cert.order.front());
    return out;
}

}  // namespace

CheckResult check_certificate(const Graph& g, const ConstraintSpec& spec, const Certificate& cert) {
    const int n = g.vertex_count();
    if (cert.kind != spec.kind) return {false, "kind-mismatch"};
    if (static_cast<int>(cert.order.size()) != n) return {false, "order-size"};
    std::vector<char> seen(n, 0);
    for (int v : cert.order) {
        if (v < 0 || v >= n) return {false, "order-vertex-range"};
        if (seen[v]) return {false, "order-not-permutation"};
        seen[v] = 1;
    }
    if (cert.kind == CertKind::cycle && n < 3) return {false, "cycle-too-short"};
    if (cert.kind == CertKind::path) {
        if (!spec.endpoints) return {false, "endpoints-unspecified"};
        if (n == 0) return {false, "order-size"};
        if (cert.order.front() != spec.endpoints->first || cert.order.back() != spec.endpoints->second)
            return {false, "endpoint-mismatch"};
    }

    const std::vector<Edge> route = route_edges(cert);
    for (const Edge& e : route)
        if (!within_distance_two(g, e.u, e.v)) return {false, "adjacency-gap"};

    std::set<Edge> on_route(route.begin(), route.end());

    // Witness coverage: the witnesses' vertex multiset must equal the required
    // one, each edge distinct, in the base graph, on the route, containing its
    // vertex.
    std::vector<int> required = spec.witness_vertices;
    std::vector<int> provided;
    for (const auto& [x, e] : cert.witnesses) provided.push_back(x);
    std::sort(required.begin(), required.end());
    std::sort(provided.begin(), provided.end());
    if (required != provided) return {false, "witness-vertices-mismatch"};
    std::set<Edge> used;
    for (const auto& [x, e] : cert.witnesses) {
        if (!e.contains(x)) return {false, "witness-edge-wrong-vertex"};
        if (e.u < 0 || e.v >= n || !g.has_edge(e.u, e.v)) return {false, "witness-edge-not-in-g"};
        if (!on_route.count(e)) return {false, "witness-edge-off-route"};
        if (!used.insert(e).second) return {false, "witness-edges-not-distinct"};
    }

    // Anchor requirements on base-graph membership of route edges.
    auto base_edges_at = [&](int v) {
        std::vector<Edge> out;
        for (const Edge& e : route)
            if (e.contains(v) && g.has_edge(e.u, e.v)) out.push_back(e);
        return out;
    };
    auto route_degree = [&](int v) {
        int d = 0;
        for (const Edge& e : route)
            if (e.contains(v)) ++d;
        return d;
    };
    for (const AnchorSpec& a : spec.anchors) {
        if (a.vertex < 0 || a.vertex >= n) return {false, "anchor-vertex-range"};
        const int in_g = static_cast<int>(base_edges_at(a.vertex).size());
        switch (a.mode) {
            case AnchorMode::both_edges:
                if (in_g != route_degree(a.vertex)) return {false, "anchor-violation"};
                break;
            case AnchorMode::at_least_one:
                if (in_g < 1) return {false, "anchor-violation"};
                break;
            case AnchorMode::exactly_one:
                if (in_g != 1) return {false, "anchor-violation"};
                break;
        }
    }
    if (spec.anchors_need_distinct_triple) {
        const AnchorSpec* dbl = nullptr;
        const AnchorSpec* single = nullptr;
        for (const AnchorSpec& a : spec.anchors) {
            if (a.mode == AnchorMode::both_edges) dbl = &a;
            if (a.mode == AnchorMode::at_least_one) single = &a;
        }
        if (!dbl || !single) return {false, "anchor-triple-unspecified"};
        std::vector<Edge> at_v = base_edges_at(dbl->vertex);
        bool extra = false;
        for (const Edge& e : base_edges_at(single->vertex))
            if (std::find(at_v.begin(), at_v.end(), e) == at_v.end()) extra = true;
        if (!extra) return {false, "anchor-distinctness"};
    }

    return {true, ""};
}

Certificate canonical_certificate(const Certificate& cert) {
    Certificate out = cert;
    if (out.kind == CertKind::cycle && out.order.size() >= 3) {
        const size_t n = out.order.size();
        size_t p = std::min_element(out.order.begin(), out.order.end()) - out.order.begin();
        std::vector<int> fwd(n), bwd(n);
        for (size_t i = 0; i < n; ++i) {
            fwd[i] = out.order[(p + i) % n];
            bwd[i] = out.order[(p + n - i) % n];
        }
        out.order = (bwd[1] < fwd[1]) ? bwd : fwd;
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
    return out;
}

Certificate translate_certificate(const Certificate& cert, const std::vector<int>& old_to_new) {
    auto rename = [&](int v) {
        if (v < 0 || v >= static_cast<int>(old_to_new.size()) || old_to_new[v] < 0)
            throw std::invalid_argument("translate_certificate: vertex has no image");
        return old_to_new[v];
    };
    Certificate out;
    out.kind = cert.kind;
    for (int v : cert.order) out.order.push_back(rename(v));
    for (const auto& [x, e] : cert.witnesses) out.witnesses.emplace_back(rename(x), Edge(rename(e.u), rename(e.v)));
    return out;
}

}  // namespace hamsq
