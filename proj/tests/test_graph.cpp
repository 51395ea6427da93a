#include <algorithm>
#include <set>

#include "doctest.h"
#include "hamsq/graph.hpp"
#include "support/brute.hpp"

using namespace hamsq;

TEST_CASE("square closes short distances") {
    CHECK(square(path_graph(3)) == complete_graph(3));
    CHECK(square(cycle_graph(5)) == complete_graph(5));

    Graph c6sq = square(cycle_graph(6));
    CHECK(c6sq.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(c6sq.degree(v) == 4);
}

TEST_CASE("degrees and neighborhoods") {
    Graph c4 = cycle_graph(4);
    CHECK(c4.degree(0) == 2);
    CHECK(complete_graph(4).degree(2) == 3);
    CHECK(two_valent_vertices(cycle_graph(7)).size() == 7);
    CHECK_THROWS_AS(c4.degree(9), std::invalid_argument);
    CHECK(c4.neighbors(0) == std::vector<int>{1, 3});
}

TEST_CASE("surgeries keep set semantics and report relabelings") {
    CHECK(delete_edges(cycle_graph(4), {Edge(0, 1)}) == Graph(4, {Edge(1, 2), Edge(2, 3), Edge(3, 0)}));

    auto cut = delete_vertices(complete_graph(4), {3});
    CHECK(cut.graph == complete_graph(3));
    CHECK(cut.old_to_new == std::vector<int>{0, 1, 2, -1});
    CHECK(cut.new_to_old == std::vector<int>{0, 1, 2});

    CHECK(add_edges(path_graph(4), {Edge(0, 3)}) == cycle_graph(4));
    CHECK(add_edges(cycle_graph(4), {Edge(0, 1)}) == cycle_graph(4));  // already present

    Graph crossed = disjoint_union_with_cross_edges(cycle_graph(3), 2, {Edge(0, 3), Edge(1, 4)});
    CHECK(crossed.vertex_count() == 5);
    CHECK(crossed.edge_count() == 5);
    CHECK_THROWS_AS(disjoint_union_with_cross_edges(cycle_graph(3), 1, {Edge(0, 9)}), std::invalid_argument);
}

TEST_CASE("graph6 hand-decoded line") {
    // 'D' encodes n=5; bodies '?' and '{' give bits 000000 111100: exactly the
    // four pairs (0,4),(1,4),(2,4),(3,4) in column order, i.e. a 4-star at 4.
    Graph g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    std::vector<Edge> expect = {Edge(0, 4), Edge(1, 4), Edge(2, 4), Edge(3, 4)};
    CHECK(g.edges() == expect);
    CHECK(g == brute::decode_graph6_reference("D?{"));
    CHECK(emit_graph6(g) == "D?{");
}

TEST_CASE("graph6 round trips and edge cases") {
    CHECK(emit_graph6(empty_graph(1)) == "@");
    CHECK(parse_graph6(emit_graph6(cycle_graph(6))) == cycle_graph(6));
    CHECK(parse_graph6(">>graph6<<D?{").vertex_count() == 5);

    Lcg64 rng{411};
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng.bounded(40));
        Graph g = brute::random_graph(rng, n, 35);
        std::string line = emit_graph6(g);
        CHECK(parse_graph6(line) == g);
        CHECK(brute::decode_graph6_reference(line) == g);
    }
    // A 70-vertex graph exercises the long length header.
    Graph big = path_graph(70);
    CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);       // body too short
    CHECK_THROWS_AS(parse_graph6("D?{{"), std::invalid_argument);     // body too long
    CHECK_THROWS_AS(parse_graph6("D?\x07"), std::invalid_argument);   // non-printable byte
    CHECK_THROWS_AS(parse_graph6(std::string("B") + char(127)), std::invalid_argument);
    // '@' after a 2-vertex header leaves a nonzero padding bit.
    CHECK_THROWS_AS(parse_graph6("AO"), std::invalid_argument);
}

TEST_CASE("square agrees with distance oracle on random graphs") {
    Lcg64 rng{2024};
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(49));
        Graph g = brute::random_graph(rng, n, 10 + static_cast<int>(rng.bounded(50)));
        CHECK(square(g) == brute::square_by_distance(g));
    }
}

TEST_CASE("square contains the graph and double squares reach distance four") {
    Lcg64 rng{7};
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.bounded(20));
        Graph g = brute::random_graph(rng, n, 25);
        Graph sq = square(g);
        for (const Edge& e : g.edges()) CHECK(sq.has_edge(e.u, e.v));
        Graph sq2 = square(sq);
        auto dist = brute::all_pairs_distance(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(sq2.has_edge(u, v) == (dist[u][v] <= 4));
    }
}
