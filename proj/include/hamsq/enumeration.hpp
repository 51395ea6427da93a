#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

/// Canonical adjacency bit string (graph6 bit order) minimized over all
/// relabelings consistent with an iterated-degree partition. Equal strings
/// iff isomorphic; intended for n <= 12 or so.
std::string canonical_code(const Graph& g);

/// Relabels the graph into its canonical form.
Graph canonical_form(const Graph& g);

/// All graphs on exactly n vertices up to isomorphism (including
/// disconnected ones), in canonical form, sorted by graph6 line.
std::vector<Graph> enumerate_graphs(int n);

/// All connected graphs on exactly n vertices up to isomorphism.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Convenience filters over the connected enumeration.
std::vector<Graph> enumerate_two_blocks(int n);
std::vector<Graph> enumerate_blockchains(int n, bool nontrivial_only);

}  // namespace hamsq
