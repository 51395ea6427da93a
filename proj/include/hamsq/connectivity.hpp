#pragma once

#include <optional>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

/// Blocks (maximal 2-connected subgraphs or bridges) and cutvertices of a
/// connected graph, together with the block/cutvertex incidences that define
/// the block-cutvertex tree.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;            // sorted vertex sets
    std::vector<int> cutvertices;                    // sorted
    std::vector<std::vector<int>> block_cutvertices; // parallel to blocks

    bool is_cutvertex(int v) const;
};

std::vector<int> cut_vertices(const Graph& g);
BlockDecomposition blocks(const Graph& g);

/// Brute-force separator search; complete graphs give n-1.
int vertex_connectivity(const Graph& g);
bool is_two_block(const Graph& g);

/// A connected graph whose block-cutvertex tree is a path. Blocks are ordered
/// B_1..B_k with cutvertices c_1..c_{k-1}, c_i in V(B_i) & V(B_{i+1}); the
/// endblock with the lexicographically least vertex set comes first.
struct Blockchain {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cutvertices;
    bool trivial = false;
};

std::optional<Blockchain> as_blockchain(const Graph& g);
std::vector<int> inner_vertices(const Graph& g, const Blockchain& chain);

/// Edges whose both endpoints have degree >= 3.
std::vector<Edge> d_edge_set(const Graph& g);
bool is_dt_graph(const Graph& g);

/// True iff the graph is 2-connected and every single-edge deletion leaves a
/// graph that is merely 1-connected.
bool is_edge_critical_block(const Graph& g);

/// For an edge-critical block that is not a DT-graph: an edge f with both
/// endpoints of degree >= 3 whose deletion leaves a blockchain with a
/// DT 2-block endblock. nullopt only after exhausting all candidates, which
/// callers must surface as a finding.
std::optional<Edge> find_reducing_edge(const Graph& g);

}  // namespace hamsq
