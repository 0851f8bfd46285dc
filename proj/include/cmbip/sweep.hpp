#pragma once

#include <cstdint>

#include "cmbip/graph.hpp"

namespace cmbip {

struct SweepOptions {
    int jobs = 1;
    bool corollaries = true;    // unique-PM and complement-connectivity checks
    bool zero_divisor = true;   // condition 1 vs Lemma-2 test
};

struct SweepCounts {
    std::uint64_t total = 0;
    std::uint64_t cm = 0;
    std::uint64_t unmixed = 0;
    std::uint64_t unmixed_not_cm = 0;
    std::uint64_t reisner_disagreements = 0;
    std::uint64_t purity_disagreements = 0;
    std::uint64_t corollary_failures = 0;
    std::uint64_t zero_divisor_failures = 0;

    std::uint64_t disagreements() const {
        return reisner_disagreements + purity_disagreements +
               corollary_failures + zero_divisor_failures;
    }

    SweepCounts& operator+=(const SweepCounts& o);
};

// Checker and oracle results for one normalized graph, compared.
SweepCounts sweep_one(const BipartiteGraph& g, const SweepOptions& opt);

// All 2^(nA*nB) edge subsets of the grid.
SweepCounts run_sweep(int part_a_size, int part_b_size, const SweepOptions& opt);

}  // namespace cmbip
