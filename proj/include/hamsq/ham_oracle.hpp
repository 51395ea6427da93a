#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamsq/certificate.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

enum class SearchStatus { found, absent, unknown };

struct SearchOptions {
    std::chrono::milliseconds timeout{10000};
    /// Exhaust the search and return the lexicographically least canonical
    /// certificate instead of the first one found.
    bool lex_min = false;
    int max_n = 64;
    /// Optional extra filter: hits failing it are skipped (search goes on).
    std::function<bool(const Certificate&)> accept;
};

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Certificate> certificate;
    std::uint64_t nodes_expanded = 0;
};

/// Exhaustive backtracking search for a hamiltonian cycle/path of square(g)
/// meeting the spec. `absent` is only ever reported after full exhaustion;
/// running out of time yields `unknown`.
SearchResult solve(const Graph& g, const ConstraintSpec& spec, const SearchOptions& opts = {});

/// Hamiltonian cycle in square(g) with pairwise distinct base edges, one at
/// each vertex of X.
SearchResult find_h_cycle(const Graph& g, const std::vector<int>& x, const SearchOptions& opts = {});

/// x1..x2 hamiltonian path in square(g) with distinct base edges at each
/// vertex of r (all disjoint from the endpoints).
SearchResult find_f_path(const Graph& g, int x1, int x2, const std::vector<int>& r,
                         const SearchOptions& opts = {});

/// x1..x2 hamiltonian path in square(g) with distinct base edges at x3 and at
/// the endpoint selected by strong_index (1 or 2).
SearchResult find_strong_f3_path(const Graph& g, int x1, int x2, int x3, int strong_index,
                                 const SearchOptions& opts = {});

/// Hamiltonian cycle in square(g) whose both edges at v lie in g and at least
/// one edge at w lies in g; when v and w are adjacent the three edges must be
/// pairwise distinct. Requires a 2-connected graph.
SearchResult find_thm3_cycle(const Graph& g, int v, int w, const SearchOptions& opts = {});

struct Thm4Result {
    SearchResult search;
    bool u1_in_two_block = false;
    bool u2_in_two_block = false;
    /// Set when the exact per-vertex condition is unattainable but a relaxed
    /// one (at least one base edge) is; the instance deserves review.
    bool flagged_for_review = false;
};

/// Hamiltonian cycle in square(g) for a blockchain g: at each u_i both route
/// edges lie in g when u_i sits in a 2-block, else exactly one does.
Thm4Result find_thm4_cycle(const Graph& g, int u1, int u2, const SearchOptions& opts = {});

}  // namespace hamsq
