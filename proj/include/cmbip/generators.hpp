#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cmbip/graph.hpp"

namespace cmbip {

// Deterministic cross-platform stream; the algorithm id is recorded in
// generated file metadata.
struct SplitMix64 {
    static constexpr const char* kAlgorithmId = "splitmix64";

    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Strict partial order on elements 0..element_count-1; the relation is
// transitively closed at construction.
struct PosetSpec {
    int element_count = 0;
    std::vector<std::pair<int, int>> relation;  // (i, j) means i < j, sorted

    static PosetSpec make(int element_count, std::vector<std::pair<int, int>> relation);

    bool less(int i, int j) const;
};

constexpr int kSweepCellBound = 16;

// Edge subset of the nA x nB grid selected by rank bits, row-major, normalized.
NormalizeResult graph_from_rank(int part_a_size, int part_b_size,
                                std::uint32_t rank);

// Every edge subset of the nA x nB grid, normalized, in subset-rank order.
void all_bipartite_graphs(
    int part_a_size, int part_b_size,
    const std::function<void(std::uint32_t rank, const NormalizeResult&)>& fn);

NormalizeResult random_bipartite(int part_a_size, int part_b_size,
                                 double edge_probability, std::uint64_t seed);

// x_i ~ y_j iff i = j or i < j in the poset; always Cohen-Macaulay.
BipartiteGraph poset_graph(const PosetSpec& ps);

// Chain 0 < 1 < ... < n-1.
PosetSpec chain_poset(int n);

// Random DAG on the fixed order 0..n-1, transitively closed.
PosetSpec random_poset(int n, double relation_probability, std::uint64_t seed);

enum class PerturbOp { add_edge, remove_edge };

// One uniformly random applicable single-edge change; result normalized.
// Throws GraphError when no position is applicable.
NormalizeResult perturb(const BipartiteGraph& g, PerturbOp op, std::uint64_t seed);

}  // namespace cmbip
