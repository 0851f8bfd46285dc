#include <doctest.h>

#include "cmbip/generators.hpp"
#include "cmbip/graph.hpp"
#include "test_util.hpp"

using namespace cmbip;
using namespace cmbip::testutil;

TEST_CASE("parse smallest valid input") {
    auto nr = parse_graph("p bip 1 1 1\ne 1 1\n");
    CHECK(nr.graph == k2());
    CHECK(nr.stripped.empty());
}

TEST_CASE("parse P4") {
    auto nr = parse_graph("p bip 2 2 3\ne 1 1\ne 2 1\ne 2 2\n");
    CHECK(nr.graph == p4());
    CHECK(nr.stripped.empty());
}

TEST_CASE("parse strips isolated vertices with a report") {
    auto nr = parse_graph("p bip 2 1 1\ne 1 1\n");
    CHECK(nr.graph == k2());
    REQUIRE(nr.stripped.size() == 1);
    CHECK(nr.stripped[0] == VertexRef{Side::A, 1});
}

TEST_CASE("parse accepts comments and blank lines") {
    auto nr = parse_graph("c a comment\n\np bip 1 1 1\nc another\ne 1 1\n");
    CHECK(nr.graph == k2());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph("p bip x 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p bip 1 1 1\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p bip 2 2 2\ne 1 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p bip 1 1 2\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("p bip 2 2 2\ne 1 1\ne 1 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("duplicate edges are a hard construction error") {
    CHECK_THROWS_AS(make_graph(1, 1, {{0, 0}, {0, 0}}), GraphError);
    CHECK_THROWS_AS(make_graph(1, 1, {{0, 1}}), GraphError);
}

TEST_CASE("neighbors") {
    BipartiteGraph g = p4();
    CHECK(g.neighbors({Side::A, 0}) == std::vector<VertexRef>{{Side::B, 0}});
    CHECK(g.neighbors({Side::B, 0}) ==
          std::vector<VertexRef>{{Side::A, 0}, {Side::A, 1}});
    CHECK(g.neighbors({Side::A, 1}) ==
          std::vector<VertexRef>{{Side::B, 0}, {Side::B, 1}});
    CHECK(k2().neighbors({Side::A, 0}) == std::vector<VertexRef>{{Side::B, 0}});
    CHECK_THROWS_AS(g.neighbors({Side::A, 5}), GraphError);
}

TEST_CASE("is_complete_between") {
    Bitset both(2);
    both.set(0);
    both.set(1);
    Bitset empty(2);
    Bitset b2(2);
    b2.set(1);
    CHECK_FALSE(is_complete_between(k22(), both, both).has_value());
    auto missing = is_complete_between(p4(), both, b2);
    REQUIRE(missing.has_value());
    CHECK(*missing == std::make_pair(0, 1));  // (a1, b2)
    CHECK_FALSE(is_complete_between(p4(), empty, both).has_value());
}

TEST_CASE("complement_connected_on_pairs") {
    CHECK_FALSE(complement_connected_on_pairs(k22(), {0, 0}, {1, 1}));
    CHECK(complement_connected_on_pairs(p4(), {0, 0}, {1, 1}));
    BipartiteGraph two_k2 = make_graph(2, 2, {{0, 0}, {1, 1}});
    CHECK(complement_connected_on_pairs(two_k2, {0, 0}, {1, 1}));
    CHECK_THROWS_AS(complement_connected_on_pairs(p4(), {0, 0}, {0, 1}), GraphError);
    CHECK_THROWS_AS(complement_connected_on_pairs(two_k2, {0, 1}, {1, 0}), GraphError);
}

TEST_CASE("serialize round-trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto nr = random_bipartite(4, 5, 0.4, seed);
        auto back = parse_graph(serialize_graph(nr.graph));
        CHECK(back.graph == nr.graph);
        CHECK(back.stripped.empty());
    }
}

TEST_CASE("neighbor symmetry on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto nr = random_bipartite(5, 4, 0.5, seed);
        const BipartiteGraph& g = nr.graph;
        for (int a = 0; a < g.part_a_size(); ++a)
            for (int b = 0; b < g.part_b_size(); ++b)
                CHECK(g.neighbors_of_a(a).test(b) == g.neighbors_of_b(b).test(a));
    }
}
