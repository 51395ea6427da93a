#pragma once

#include <optional>
#include <vector>

#include "hamsq/certificate.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

/// Spanning connected subgraph split into an even-degree part and a linear
/// forest, edge-disjoint.
struct EpsGraph {
    std::vector<Edge> e_part;
    std::vector<Edge> p_part;
};

/// Validates the EpsGraph invariants from scratch, independent of any search.
CheckResult validate_eps(const Graph& host, const EpsGraph& eps);

/// All simple cycles as canonical vertex sequences (min vertex first, smaller
/// second vertex), sorted.
std::vector<std::vector<int>> enumerate_cycles(const Graph& g);

struct WMaximalResult {
    std::vector<int> cycle;
    int hits = 0;
};

/// Cycle meeting |V(K) & W| = max over all cycles; first canonical maximizer.
WMaximalResult find_w_maximal_cycle(const Graph& g, const std::vector<int>& w);

/// Definition-literal test: p_edges spans a blockchain P of g - K attached to
/// the cycle K, some W-vertex is a cutvertex of P, both endblocks reach K,
/// the base-side endblock meets K exactly in {x}, no K-vertex cuts P, and all
/// other K-attachments sit in the far endblock.
bool is_w_separated_ktok_blockchain(const Graph& g, const std::vector<int>& k_cycle,
                                    const std::vector<Edge>& p_edges, int x, const std::vector<int>& w);

/// One attachment structure of g - K recorded as evidence.
struct SeparatedChain {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    int base = -1;
    std::vector<int> shortest_path;  // base .. cycle vertex
};

struct AttachmentEvidence {
    int base = -1;
    std::vector<SeparatedChain> chains;
    std::vector<int> subsequence;  // the cyclic order found on K
};

struct SoundnessReport {
    std::vector<int> cycle;
    std::vector<int> w;
    int hits = 0;
    bool maximal = false;
    bool sound = false;
    std::optional<AttachmentEvidence> clause2_evidence;
    std::optional<AttachmentEvidence> clause3_evidence;
};

/// Checks the five-vertex soundness conditions for cycle K against W.
SoundnessReport is_w_sound(const Graph& g, const std::vector<int>& k_cycle, const std::vector<int>& w);

/// Exhaustive scan over the maximizing cycles; nullopt after exhaustion is a
/// finding callers must surface.
std::optional<SoundnessReport> find_w_sound_cycle(const Graph& g, const std::vector<int>& w);

/// Spanning even-part/linear-forest split with the cycle inside the even part
/// and every W-vertex touching at most one forest edge. Complete search;
/// nullopt after exhaustion is a finding.
std::optional<EpsGraph> find_eps_with_sound_cycle(const Graph& g, const std::vector<int>& k_cycle,
                                                  const std::vector<int>& w);

}  // namespace hamsq
