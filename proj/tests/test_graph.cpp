#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chiforge/graph.hpp"
#include "test_util.hpp"

using namespace chiforge;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.insert({u, v});
    return out;
}

}  // namespace

TEST_CASE("graph6 decode, values derived by hand from the byte layout") {
    // 'D'-63 = 5 vertices; '?' = 000000, '{' = 111100 over the column-major
    // triangle (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4): a star at 4.
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(edge_set(star) == std::set<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    // 'U' = 010110, 'W' = 011000: edges 02 03 13 14 24, the 5-cycle 0-2-4-1-3-0.
    Graph c5 = parse_graph6("DUW");
    CHECK(c5.order() == 5);
    CHECK(edge_set(c5) == std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    for (int u = 0; u < 5; ++u) CHECK(c5.degree(u) == 2);
    CHECK(is_connected(c5));

    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<D?{").order() == 5);
}

TEST_CASE("graph6 encode matches hand-packed bits") {
    // Natural C5 triangle bits 1010 01|1001 + pad -> 41,36 -> 'h','c'.
    CHECK(write_graph6(cycle_graph(5)) == "Dhc");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(parse_graph6("D?{")) == "D?{");
    CHECK(write_graph6(parse_graph6("DUW")) == "DUW");
}

TEST_CASE("graph6 malformed inputs raise parse errors with offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);        // truncated edge data
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);      // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D?\x1f"), ParseError);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("\x7f??"), ParseError);    // byte above 126 in count
    CHECK_THROWS_AS(parse_graph6("C?{"), ParseError);       // nonzero padding for n=4
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);    // n >= 258048 form
    CHECK_THROWS_AS(parse_graph6("~?B?"), ParseError);      // n = 128 > 64
    try {
        parse_graph6("D?");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("graph6 long form covers 63 and 64 vertices") {
    for (int n : {63, 64}) {
        testutil::SplitMix64 rng(11 + n);
        Graph g = testutil::random_graph(n, 31, rng);
        std::string s = write_graph6(g);
        CHECK(s[0] == '~');
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 round trip against an independent decoder") {
    testutil::SplitMix64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.below(11));
        Graph g = testutil::random_graph(n, 20 + static_cast<int>(rng.below(60)), rng);
        std::string s = write_graph6(g);
        CHECK(parse_graph6(s) == g);
        testutil::Matrix m = testutil::g6_decode_independent(s);
        REQUIRE(static_cast<int>(m.size()) == n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) CHECK(m[u][v] == g.adjacent(u, v));
    }
}

TEST_CASE("basic accessors and invariants") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.degree_sequence() == std::vector<int>{0, 1, 1, 2});
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), CapacityError);
    CHECK_THROWS_AS(Graph(-1), CapacityError);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    Graph c5 = cycle_graph(5);
    Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    for (int u = 0; u < 5; ++u) CHECK(cc.degree(u) == 2);
    testutil::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(static_cast<int>(rng.below(10)), 50, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    Graph c5 = cycle_graph(5);
    Graph p3 = induced(c5, 0b00111);
    CHECK(p3.order() == 3);
    CHECK(edge_set(p3) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(induced(c5, c5.vertices()) == c5);
    CHECK(induced(c5, 0).order() == 0);
    CHECK_THROWS_AS(induced(c5, bits::bit(5)), std::invalid_argument);
}

TEST_CASE("disjoint union, copies, join") {
    Graph two_k2 = copies(2, complete_graph(2));
    CHECK(two_k2.order() == 4);
    CHECK(edge_set(two_k2) == std::set<std::pair<int, int>>{{0, 1}, {2, 3}});

    Graph w5 = join(complete_graph(1), cycle_graph(5));
    CHECK(w5.order() == 6);
    CHECK(w5.edge_count() == 10);
    CHECK(w5.degree(0) == 5);
    CHECK(w5.degree_sequence() == std::vector<int>{3, 3, 3, 3, 3, 5});

    CHECK_THROWS_AS(join(complete_graph(33), complete_graph(32)), CapacityError);
    CHECK_THROWS_AS(copies(-1, complete_graph(1)), std::invalid_argument);

    // max degree of a join: one side's max degree plus the whole other side
    testutil::SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = testutil::random_graph(1 + static_cast<int>(rng.below(6)), 40, rng);
        Graph b = testutil::random_graph(1 + static_cast<int>(rng.below(6)), 40, rng);
        Graph j = join(a, b);
        int want = std::max(a.max_degree() + b.order(), b.max_degree() + a.order());
        CHECK(j.max_degree() == want);
    }
}

TEST_CASE("expansion") {
    Graph c5 = cycle_graph(5);
    Graph doubled = expansion(c5, {2, 2, 2, 2, 2});
    CHECK(doubled.order() == 10);
    // block of vertex 0 is {0,1}; adjacent to blocks of 1 ({2,3}) and 4 ({8,9})
    CHECK(doubled.adjacent(0, 1));
    CHECK(doubled.adjacent(0, 2));
    CHECK(doubled.adjacent(1, 9));
    CHECK(!doubled.adjacent(0, 4));

    // zero-weight vertices vanish
    Graph shrunk = expansion(c5, {0, 1, 1, 1, 1});
    CHECK(shrunk.order() == 4);
    CHECK(edge_set(shrunk) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    testutil::SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(1 + static_cast<int>(rng.below(8)), 45, rng);
        CHECK(expansion(g, unit_weights(g.order())) == g);
    }

    CHECK_THROWS_AS(expansion(c5, {20, 20, 20, 20, 20}), CapacityError);
    CHECK_THROWS_AS(expansion(c5, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(expansion(c5, {1, 1, 1, 1, -1}), std::invalid_argument);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK(!is_connected(Graph(2)));
    CHECK(is_connected(cycle_graph(6)));
    Graph g = disjoint_union(complete_graph(3), path_graph(2));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b00111);
    CHECK(comps[1] == 0b11000);
}

TEST_CASE("neighborhood shells") {
    Graph p5 = path_graph(5);
    VertexSet s = bits::bit(0);
    CHECK(neighborhood_shell(p5, s, 0) == s);
    CHECK(neighborhood_shell(p5, s, 1) == bits::bit(1));
    CHECK(neighborhood_shell(p5, s, 4) == bits::bit(4));
    CHECK(neighborhood_shell(p5, s, 5) == 0);
    CHECK_THROWS_AS(neighborhood_shell(p5, 0, 1), std::invalid_argument);

    // shells partition the component of the seed
    testutil::SplitMix64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.below(9));
        Graph g = testutil::random_graph(n, 30, rng);
        VertexSet seed = bits::bit(static_cast<int>(rng.below(n)));
        VertexSet seen = 0;
        for (int d = 0; d <= n; ++d) {
            VertexSet shell = neighborhood_shell(g, seed, d);
            CHECK((shell & seen) == 0);
            seen |= shell;
        }
        VertexSet comp = 0;
        for (VertexSet c : components(g))
            if (c & seed) comp = c;
        CHECK(seen == comp);
    }
}

TEST_CASE("set predicates") {
    Graph c4 = cycle_graph(4);
    CHECK(is_complete_between(c4, 0b0001, 0b1010));
    CHECK(!is_complete_between(c4, 0b0001, 0b0100));
    CHECK(is_anticomplete_between(c4, 0b0001, 0b0100));
    CHECK_THROWS_AS(is_complete_between(c4, 0b0011, 0b0110), std::invalid_argument);
    CHECK_THROWS_AS(is_anticomplete_between(c4, 0b0011, 0b0110), std::invalid_argument);
    CHECK(is_clique(complete_graph(4), 0b1111));
    CHECK(!is_clique(c4, 0b0111));
    CHECK(is_independent(c4, 0b0101));
    CHECK(!is_independent(c4, 0b0011));
}

TEST_CASE("weights") {
    VertexWeights q{2, 0, 1};
    CHECK(weight_support(q) == 0b101);
    CHECK(weight_total(q) == 3);
    CHECK(weight_of_set(q, 0b110) == 1);
    CHECK(unit_weights(3) == VertexWeights{1, 1, 1});
    CHECK_THROWS_AS(check_weights(Graph(2), q), std::invalid_argument);
    CHECK_THROWS_AS(check_weights(Graph(3), VertexWeights{1, -2, 0}), std::invalid_argument);
}
