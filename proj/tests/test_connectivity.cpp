#include <algorithm>
#include <set>

#include "doctest.h"
#include "hamsq/connectivity.hpp"
#include "hamsq/enumeration.hpp"
#include "support/brute.hpp"

using namespace hamsq;

namespace {

Graph two_triangles_sharing(int v) {
    // Triangles 0-1-v and 2-3-v.
    return Graph(5, {Edge(0, 1), Edge(0, v), Edge(1, v), Edge(2, 3), Edge(2, v), Edge(3, v)});
}

}  // namespace

TEST_CASE("blocks and cutvertices on the stock examples") {
    BlockDecomposition one = blocks(cycle_graph(5));
    CHECK(one.blocks.size() == 1);
    CHECK(one.cutvertices.empty());

    BlockDecomposition two = blocks(two_triangles_sharing(4));
    CHECK(two.blocks.size() == 2);
    CHECK(two.cutvertices == std::vector<int>{4});

    BlockDecomposition path = blocks(path_graph(4));
    CHECK(path.blocks.size() == 3);
    CHECK(path.cutvertices == std::vector<int>{1, 2});

    CHECK_THROWS_AS(blocks(Graph(4, {Edge(0, 1), Edge(2, 3)})), std::invalid_argument);
}

TEST_CASE("blocks agree with the subset oracle on all small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            BlockDecomposition dec = blocks(g);
            CHECK(dec.blocks == brute::blocks_by_subsets(g));
            CHECK(dec.cutvertices == brute::cutvertices_by_deletion(g));
        }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(cycle_graph(4)) == 2);
    CHECK(is_two_block(cycle_graph(4)));
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(is_two_block(complete_graph(4)));
    CHECK_FALSE(is_two_block(path_graph(4)));
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK(vertex_connectivity(complete_graph(1)) == 0);

    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            CHECK(vertex_connectivity(g) == brute::vertex_connectivity_by_separators(g));
}

TEST_CASE("blockchain recognition and ordering") {
    auto trivial = as_blockchain(cycle_graph(4));
    REQUIRE(trivial.has_value());
    CHECK(trivial->trivial);
    CHECK(inner_vertices(cycle_graph(4), *trivial).size() == 4);

    // Two squares sharing vertex 3: 0-1-2-3 cycle and 3-4-5-6 cycle.
    Graph chain(7, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(3, 4), Edge(4, 5), Edge(5, 6), Edge(3, 6)});
    auto bc = as_blockchain(chain);
    REQUIRE(bc.has_value());
    CHECK_FALSE(bc->trivial);
    CHECK(bc->blocks.size() == 2);
    CHECK(bc->cutvertices == std::vector<int>{3});
    CHECK(bc->blocks.front() == std::vector<int>{0, 1, 2, 3});
    std::vector<int> inner = inner_vertices(chain, *bc);
    CHECK(inner.size() == 6);
    CHECK(std::find(inner.begin(), inner.end(), 3) == inner.end());

    // Subdivided 3-star: center 0, legs 0-1-2, 0-3-4, 0-5-6.
    Graph star(7, {Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(3, 4), Edge(0, 5), Edge(5, 6)});
    CHECK_FALSE(as_blockchain(star).has_value());
}

TEST_CASE("degree-two structure predicates") {
    CHECK(d_edge_set(cycle_graph(6)).empty());
    CHECK(d_edge_set(complete_graph(4)).size() == 6);
    Graph k23(5, {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 3), Edge(1, 4)});
    CHECK(d_edge_set(k23).empty());
    CHECK(is_dt_graph(k23));
    CHECK(is_dt_graph(cycle_graph(5)));
    CHECK_FALSE(is_dt_graph(complete_graph(4)));

    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            CHECK(is_dt_graph(g) == d_edge_set(g).empty());
}

TEST_CASE("edge-critical blocks") {
    CHECK(is_edge_critical_block(cycle_graph(3)));
    CHECK(is_edge_critical_block(cycle_graph(7)));
    CHECK_FALSE(is_edge_critical_block(complete_graph(4)));
    CHECK_FALSE(is_edge_critical_block(path_graph(4)));

    Graph c4_chord = add_edges(cycle_graph(4), {Edge(0, 2)});
    // Deleting the chord keeps the 4-cycle 2-connected, so criticality fails.
    CHECK(vertex_connectivity(delete_edges(c4_chord, {Edge(0, 2)})) == 2);
    CHECK_FALSE(is_edge_critical_block(c4_chord));
}

TEST_CASE("edge-critical corpus facts up to eight vertices") {
    for (int n = 4; n <= 8; ++n)
        for (const Graph& g : enumerate_two_blocks(n)) {
            if (!is_edge_critical_block(g)) continue;
            // No triangles once the order is at least four.
            bool triangle = false;
            for (const Edge& e : g.edges())
                for (int w : g.neighbors(e.u))
                    if (w != e.v && g.has_edge(w, e.v)) triangle = true;
            CHECK_FALSE(triangle);
            // Deleting any both-ends-busy edge leaves a blockchain whose
            // endblocks are 2-blocks.
            for (const Edge& f : d_edge_set(g)) {
                Graph cut = delete_edges(g, {f});
                auto chain = as_blockchain(cut);
                REQUIRE(chain.has_value());
                CHECK_FALSE(chain->trivial);
                CHECK(chain->blocks.front().size() >= 3);
                CHECK(chain->blocks.back().size() >= 3);
            }
        }
}

TEST_CASE("reducing edge search") {
    CHECK_THROWS_AS(find_reducing_edge(cycle_graph(6)), std::invalid_argument);     // already a DT-graph
    CHECK_THROWS_AS(find_reducing_edge(complete_graph(4)), std::invalid_argument);  // not edge-critical

    int exercised = 0;
    for (int n = 4; n <= 8; ++n)
        for (const Graph& g : enumerate_two_blocks(n)) {
            if (!is_edge_critical_block(g) || is_dt_graph(g)) continue;
            auto f = find_reducing_edge(g);
            REQUIRE(f.has_value());
            CHECK(g.degree(f->u) >= 3);
            CHECK(g.degree(f->v) >= 3);
            Graph cut = delete_edges(g, {*f});
            auto chain = as_blockchain(cut);
            REQUIRE(chain.has_value());
            auto dt_two_block = [&](const std::vector<int>& blk) {
                if (blk.size() < 3) return false;
                return is_dt_graph(induced_subgraph(cut, blk).graph);
            };
            CHECK((dt_two_block(chain->blocks.front()) || dt_two_block(chain->blocks.back())));
            ++exercised;
        }
    CHECK(exercised > 0);
}

TEST_CASE("small-graph generator matches the labeled dedup oracle") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_graphs(n).size() == brute::all_graphs_by_labeled_dedup(n, false).size());
        if (n >= 3) CHECK(enumerate_two_blocks(n).size() == brute::all_graphs_by_labeled_dedup(n, true).size());
    }
    // Frozen counts computed with the oracle-verified generator.
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK(enumerate_connected_graphs(7).size() == 853);
    CHECK(enumerate_two_blocks(4).size() == 3);
    CHECK(enumerate_two_blocks(5).size() == 10);
    CHECK(enumerate_two_blocks(6).size() == 56);
    CHECK(enumerate_two_blocks(7).size() == 468);
}
