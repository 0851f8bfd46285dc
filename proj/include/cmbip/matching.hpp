#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmbip/graph.hpp"

namespace cmbip {

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // sorted by A index

    int size() const { return static_cast<int>(pairs.size()); }
    bool perfect_for(const BipartiteGraph& g) const {
        return g.part_a_size() == g.part_b_size() && size() == g.part_a_size();
    }
};

// Subset A of the A-side with |N(A)| < |A|.
struct HallViolator {
    std::vector<int> subset;
    std::vector<int> neighborhood;
};

struct UnbalancedParts : GraphError {
    using GraphError::GraphError;
};

// Maximum matching via Hopcroft-Karp phases. Deterministic: vertices scanned
// in ascending index, neighbors in ascending index.
Matching max_matching(const BipartiteGraph& g);

// nullopt iff a perfect matching exists. Requires balanced parts.
std::optional<HallViolator> hall_violator(const BipartiteGraph& g);

struct PmEnumeration {
    std::vector<Matching> matchings;
    bool truncated = false;
};

constexpr std::uint64_t kDefaultPmCap = 1'000'000;

// All perfect matchings up to cap, by backtracking on the uncovered vertex
// with fewest uncovered neighbors.
PmEnumeration enumerate_perfect_matchings(const BipartiteGraph& g,
                                          std::uint64_t cap = kDefaultPmCap);

enum class PmUniqueness { unique, multiple, none };

PmUniqueness has_unique_perfect_matching(const BipartiteGraph& g);

}  // namespace cmbip
