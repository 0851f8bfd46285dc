#include <doctest.h>

#include "cmbip/cm_check.hpp"
#include "cmbip/generators.hpp"
#include "cmbip/oracles.hpp"
#include "test_util.hpp"

using namespace cmbip;
using namespace cmbip::testutil;

TEST_CASE("independence_complex") {
    // K2: vertices a1=0, b1=1; facets {a1}, {b1}.
    CHECK(independence_complex(k2()).facets ==
          std::vector<std::uint64_t>{0b01, 0b10});
    // P4: a1=0, a2=1, b1=2, b2=3; facets {a1,a2}, {a1,b2}, {b1,b2}.
    CHECK(independence_complex(p4()).facets ==
          std::vector<std::uint64_t>{0b0011, 0b1001, 0b1100});
    // K22: facets {a1,a2}, {b1,b2}.
    CHECK(independence_complex(k22()).facets ==
          std::vector<std::uint64_t>{0b0011, 0b1100});
    // Empty graph: the complex {∅}.
    SimplicialComplex empty = independence_complex(make_graph(0, 0, {}));
    CHECK(empty.facets == std::vector<std::uint64_t>{0});
    CHECK(empty.dim() == -1);
}

TEST_CASE("independence_complex facets are the maximal independent sets") {
    all_bipartite_graphs(2, 3, [](std::uint32_t, const NormalizeResult& nr) {
        const BipartiteGraph& g = nr.graph;
        SimplicialComplex c = independence_complex(g);
        int n = g.vertex_count(), na = g.part_a_size();
        auto independent = [&](std::uint64_t s) {
            for (auto [a, b] : g.edges())
                if ((s & (std::uint64_t(1) << a)) &&
                    (s & (std::uint64_t(1) << (na + b))))
                    return false;
            return true;
        };
        std::vector<std::uint64_t> expect;
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
            if (!independent(s)) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!(s & (std::uint64_t(1) << v)) &&
                    independent(s | (std::uint64_t(1) << v)))
                    maximal = false;
            if (maximal) expect.push_back(s);
        }
        CHECK(c.facets == expect);
    });
}

TEST_CASE("is_pure") {
    CHECK(is_pure(independence_complex(p4())).pure);
    CHECK(is_pure(SimplicialComplex{1, {0b1}}).pure);
    auto r = is_pure(independence_complex(cond1_violator()));
    CHECK_FALSE(r.pure);
    REQUIRE(r.witness.has_value());
    CHECK(__builtin_popcountll(r.witness->first) !=
          __builtin_popcountll(r.witness->second));
}

TEST_CASE("is_completely_balanced") {
    OrderedMatching m_p4{{{0, 0}, {1, 1}}, OrderedMatching::Provenance::supplied};
    CHECK(is_completely_balanced(independence_complex(p4()), m_p4, 2));
    OrderedMatching m_k22{{{0, 0}, {1, 1}}, OrderedMatching::Provenance::supplied};
    CHECK(is_completely_balanced(independence_complex(k22()), m_k22, 2));
    OrderedMatching m3{{{0, 0}, {1, 1}, {2, 2}},
                      OrderedMatching::Provenance::supplied};
    CHECK_FALSE(
        is_completely_balanced(independence_complex(cond1_violator()), m3, 3));
}

TEST_CASE("reduced_homology fixed points") {
    // Hollow triangle: a circle.
    SimplicialComplex circle{3, {0b011, 0b101, 0b110}};
    CHECK(reduced_homology(circle).betti ==
          std::vector<long long>{0, 0, 1});
    // Two disjoint edges: two contractible components.
    CHECK(reduced_homology(independence_complex(k22())).betti ==
          std::vector<long long>{0, 1, 0});
    // P4's complex: a contractible path of three edges.
    CHECK(reduced_homology(independence_complex(p4())).betti ==
          std::vector<long long>{0, 0, 0});
    // The complex {∅}.
    CHECK(reduced_homology(SimplicialComplex{0, {0}}).betti ==
          std::vector<long long>{1});
    // Full simplex boundary on 4 vertices: a 2-sphere.
    SimplicialComplex sphere{4, {0b0111, 0b1011, 0b1101, 0b1110}};
    CHECK(reduced_homology(sphere).betti ==
          std::vector<long long>{0, 0, 0, 1});
}

TEST_CASE("reisner_is_cm") {
    auto k22r = reisner_is_cm(independence_complex(k22()));
    CHECK_FALSE(k22r.cm);
    REQUIRE(k22r.failing.has_value());
    CHECK(k22r.failing->first == 0);  // the empty face
    CHECK(k22r.failing->second == 0);  // disconnected: H~_0 != 0

    CHECK(reisner_is_cm(independence_complex(p4())).cm);
    CHECK(reisner_is_cm(SimplicialComplex{1, {0b1}}).cm);
    CHECK_FALSE(reisner_is_cm(independence_complex(cond1_violator())).cm);
}

TEST_CASE("edge ideal and zero divisors") {
    QuadraticMonomialIdeal ik22 = edge_ideal(k22());
    CHECK(ik22.variable_count == 4);
    CHECK(ik22.generators.size() == 4);
    CHECK_FALSE(is_zero_divisor_sum(ik22, 0, 2));  // x1 + y1
    CHECK_FALSE(is_zero_divisor_sum(ik22, 1, 3));

    QuadraticMonomialIdeal iv = edge_ideal(cond1_violator());
    // (a2, b2): condition (ii) with k = a1, l = b3.
    CHECK(is_zero_divisor_sum(iv, 1, 3 + 1));

    QuadraticMonomialIdeal small{4, {{0, 1}}};
    CHECK_FALSE(is_zero_divisor_sum(small, 0, 2));
    CHECK_THROWS_AS(is_zero_divisor_sum(small, 1, 1), std::invalid_argument);
}

TEST_CASE("zero divisor test against a direct witness search") {
    // Independent oracle: search multipliers of support size <= 2 directly.
    auto brute = [](const QuadraticMonomialIdeal& I, int i, int j) {
        int n = I.variable_count;
        auto in_ideal_cubed = [&](int k, int l, int v) {
            // x_k x_l x_v in I for a quadratic square-free monomial ideal
            return I.contains(k, l) || I.contains(k, v) || I.contains(l, v);
        };
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (I.contains(k, i) && I.contains(k, j)) return true;
        }
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                if (k == i || k == j || l == i || l == j) continue;
                if (I.contains(k, l)) continue;
                if (in_ideal_cubed(k, l, i) && in_ideal_cubed(k, l, j))
                    return true;
            }
        return false;
    };
    all_bipartite_graphs(2, 3, [&](std::uint32_t, const NormalizeResult& nr) {
        QuadraticMonomialIdeal I = edge_ideal(nr.graph);
        int n = I.variable_count;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(is_zero_divisor_sum(I, i, j) == brute(I, i, j));
    });
}

TEST_CASE("is_shellable_bruteforce") {
    CHECK(is_shellable_bruteforce(independence_complex(p4())) ==
          Shellability::yes);
    CHECK(is_shellable_bruteforce(independence_complex(k22())) ==
          Shellability::no);
    CHECK(is_shellable_bruteforce(SimplicialComplex{2, {0b11}}) ==
          Shellability::yes);
    CHECK(is_shellable_bruteforce(independence_complex(p4()), 2) ==
          Shellability::cap_exceeded);
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(reduced_homology(independence_complex(p4()), 2), CapExceeded);
    CHECK_THROWS_AS(independence_complex(k22(), 1), CapExceeded);
}

TEST_CASE("oracle cross-equivalences, exhaustive 2x3 and 3x3") {
    auto check_graph = [](const BipartiteGraph& g) {
        SimplicialComplex c = independence_complex(g);
        bool pure = is_pure(c).pure;
        bool reisner = reisner_is_cm(c).cm;
        CHECK(pure == is_unmixed(g).unmixed);
        // Shellable iff CM for bipartite independence complexes.
        Shellability sh = is_shellable_bruteforce(c);
        REQUIRE(sh != Shellability::cap_exceeded);
        CHECK((sh == Shellability::yes) == reisner);
        // Unmixed graphs have completely balanced complexes.
        UnmixedResult u = is_unmixed(g);
        if (u.unmixed && g.part_a_size() > 0)
            CHECK(is_completely_balanced(c, *u.matching, g.part_a_size()));
    };
    all_bipartite_graphs(2, 3, [&](std::uint32_t, const NormalizeResult& nr) {
        check_graph(nr.graph);
    });
    all_bipartite_graphs(3, 3, [&](std::uint32_t, const NormalizeResult& nr) {
        check_graph(nr.graph);
    });
}
