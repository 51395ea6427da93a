#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hamsq/certificate.hpp"
#include "hamsq/connectivity.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

/// Raised when an exhaustive sub-search fails where theory promises success;
/// callers surface these as findings rather than swallowing them.
struct finding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Merges graph b into a, identifying vertex vb of b with vertex va of a.
/// The other b-vertices are appended after a's id range, in b order; b_map
/// gives b-id -> merged-id.
Graph merge_at(const Graph& a, int va, const Graph& b, int vb, std::vector<int>* b_map = nullptr);

/// Glues blocks into a chain: attach[i] = (vertex of blocks[i], vertex of
/// blocks[i+1]) identified with each other. Within inner blocks entry and
/// exit must differ.
Graph chain_blocks(const std::vector<Graph>& blocks, const std::vector<std::pair<int, int>>& attach,
                   std::vector<std::vector<int>>* maps = nullptr);

/// Per-block witness request for blockchain_path; u and v come together,
/// except that a bridge block may carry v alone (v an endpoint of the bridge).
struct BlockWitnessRequest {
    std::optional<int> u;
    std::optional<int> v;
};

/// c0..ck hamiltonian path in square(g) for a non-trivial blockchain g,
/// assembled block by block and carrying, per requested block, two distinct
/// base edges at u_i and v_i.
Certificate blockchain_path(const Graph& g, int c0, int ck, const std::vector<BlockWitnessRequest>& want);

enum class SurgeryCase { case1, case2, case5, case7, case9, unreduced };

/// Vertices steering an endblock replacement: x is the endblock's inner
/// attachment of the outside edge x'x, y its cutvertex, a and b the fresh
/// interior of the substitute path x,a,b,y.
struct SurgeryAnchors {
    int x_prime = -1;
    int x = -1;
    int a = -1;
    int b = -1;
    int y = -1;
    int y_prime = -1;  // cases 2 and 7 only
};

struct EndblockReduction {
    Graph reduced;
    SurgeryAnchors anchors;        // reduced-graph ids
    std::vector<int> old_to_new;   // host id -> reduced id, -1 if removed
    std::vector<int> new_to_old;   // reduced id -> host id, -1 for a and b
    std::vector<int> endblock;     // host ids
};

/// Replaces a (>3)-vertex endblock B, attached to the rest through cutvertex
/// y and carrying the single outside edge at x, by the path x,a,b,y. Shrinks
/// |V|+|E| because B is not a triangle.
EndblockReduction replace_endblock_with_path(const Graph& g, const std::vector<int>& endblock, int x, int y);

struct TraversalClass {
    SurgeryCase kind = SurgeryCase::unreduced;
    SurgeryAnchors anchors;
};

/// Matches how a hamiltonian cycle of the reduced square walks the substitute
/// path against the five base patterns; anything else is unreduced.
TraversalClass classify_traversal(const Certificate& h1, const SurgeryAnchors& anchors);

struct ExtensionResult {
    Certificate certificate;
    bool direct_fallback = false;  // unreduced pattern, solved by direct search
};

/// Splices the endblock back into a classified reduced-graph cycle, yielding
/// a hamiltonian cycle of square(g) that keeps all witness edges.
ExtensionResult extend_cycle_through_endblock(const Graph& g, const EndblockReduction& red,
                                              const Certificate& h1, const TraversalClass& cls);

struct CounterexampleFamily {
    Graph base;
    int x1 = 0;
    int x2 = 1;
    int t = 3;
    Graph result;
    std::vector<int> added;  // y_1..y_t
};

/// 2-block that fails the five-witness cycle property: t >= 3 fresh vertices
/// each adjacent to exactly x1 and x2 of the base 2-block.
CounterexampleFamily build_h5_counterexample(const Graph& base, int x1, int x2, int t);

/// The witness set {x1, x2, y1, y2, y3} the family defeats.
std::vector<int> h5_query_set(const CounterexampleFamily& family);

/// Structural impossibility check, independent of any search: three distinct
/// base edges at y1..y3 plus own witnesses at x1 and x2 would need five
/// distinct cycle edges inside a 4-edge budget at {x1, x2}.
bool degree_obstruction_holds(const CounterexampleFamily& family);

}  // namespace hamsq
