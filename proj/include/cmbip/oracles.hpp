#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmbip/cm_check.hpp"
#include "cmbip/graph.hpp"

namespace cmbip {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultFaceCap = std::uint64_t(1) << 20;
constexpr int kDefaultShellFacetCap = 24;

// Faces are vertex bitmasks; at most 64 vertices. Facets are mutually
// inclusion-incomparable and kept sorted ascending as integers.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::uint64_t> facets;

    // dim = max facet cardinality - 1; -1 for the empty complex {∅}.
    int dim() const;
};

// Facets = maximal independent sets of g. Graph vertices map to complex
// vertices as A: 0..nA-1, B: nA..nA+nB-1.
SimplicialComplex independence_complex(const BipartiteGraph& g,
                                       std::uint64_t facet_cap = kDefaultFaceCap);

struct PurityResult {
    bool pure = true;
    // Two facets of different cardinality when impure.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

PurityResult is_pure(const SimplicialComplex& c);

// Every facet meets every matched pair {x_i, y_i} in exactly one vertex.
bool is_completely_balanced(const SimplicialComplex& c, const OrderedMatching& m,
                            int part_a_size);

// Reduced Betti numbers over Q; betti[k] is rank of H̃_{k-1}, so index 0 holds
// dimension -1. For the empty complex {∅} the vector is {1}.
struct BettiVector {
    std::vector<long long> betti;

    long long reduced(int dim) const {
        int k = dim + 1;
        if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
        return betti[k];
    }
};

// Boundary-matrix ranks by exact integer fraction-free elimination. Verifies
// the Euler characteristic identity internally and throws on mismatch.
BettiVector reduced_homology(const SimplicialComplex& c,
                             std::uint64_t face_cap = kDefaultFaceCap);

struct ReisnerResult {
    bool cm = false;
    // (face mask, homology dimension) where a link has nonvanishing reduced
    // homology below its dimension.
    std::optional<std::pair<std::uint64_t, int>> failing;
};

ReisnerResult reisner_is_cm(const SimplicialComplex& c,
                            std::uint64_t face_cap = kDefaultFaceCap);

// Square-free quadratic monomial ideal over variables 0..variable_count-1.
struct QuadraticMonomialIdeal {
    int variable_count = 0;
    std::set<std::pair<int, int>> generators;  // each pair (k, l) with k < l

    bool contains(int k, int l) const {
        if (k > l) std::swap(k, l);
        return generators.count({k, l}) > 0;
    }
};

// Edge ideal with variables A: 0..nA-1, B: nA..nA+nB-1.
QuadraticMonomialIdeal edge_ideal(const BipartiteGraph& g);

// Whether x_i + x_j is a zero-divisor modulo I, by the combinatorial
// characterization for quadratic monomial ideals.
bool is_zero_divisor_sum(const QuadraticMonomialIdeal& I, int i, int j);

enum class Shellability { yes, no, cap_exceeded };

// Backtracking search over facet orderings of a pure complex.
Shellability is_shellable_bruteforce(const SimplicialComplex& c,
                                     int facet_cap = kDefaultShellFacetCap);

}  // namespace cmbip
