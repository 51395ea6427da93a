#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

enum class CertKind { cycle, path };

/// A hamiltonian cycle or path in the square of a graph, plus witness edges:
/// for each required vertex x an edge of the base graph that lies on the
/// route and contains x, all witness edges pairwise distinct.
struct Certificate {
    CertKind kind = CertKind::cycle;
    std::vector<int> order;
    std::vector<std::pair<int, Edge>> witnesses;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class AnchorMode { both_edges, at_least_one, exactly_one };

/// Requirement on how many of a vertex's route edges must lie in the base graph.
struct AnchorSpec {
    int vertex = 0;
    AnchorMode mode = AnchorMode::both_edges;
};

/// What a certificate must provide. witness_vertices is a multiset: each entry
/// needs its own witness edge, edges pairwise distinct.
struct ConstraintSpec {
    CertKind kind = CertKind::cycle;
    std::vector<int> witness_vertices;
    std::optional<std::pair<int, int>> endpoints;  // path mode only
    std::vector<AnchorSpec> anchors;
    /// With a both_edges anchor v and an at_least_one anchor w: require a base
    /// edge at w on the route distinct from both base edges at v.
    bool anchors_need_distinct_triple = false;
};

struct CheckResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Validates a certificate against graph and spec from first principles; does
/// not share any logic with the search code.
CheckResult check_certificate(const Graph& g, const ConstraintSpec& spec, const Certificate& cert);

/// Cycles: rotated to start at the minimum vertex, oriented so the second
/// vertex is the smaller neighbor. Paths: unchanged. Witnesses sorted.
Certificate canonical_certificate(const Certificate& cert);

/// Applies a vertex renaming to order and witnesses.
Certificate translate_certificate(const Certificate& cert, const std::vector<int>& old_to_new);

}  // namespace hamsq
