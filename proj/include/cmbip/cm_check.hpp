#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cmbip/graph.hpp"
#include "cmbip/matching.hpp"

namespace cmbip {

// Perfect matching as an indexed pair list (x_i, y_i), x_i on side A.
struct OrderedMatching {
    enum class Provenance { peeled, supplied };

    std::vector<std::pair<int, int>> pairs;
    Provenance provenance = Provenance::supplied;

    int size() const { return static_cast<int>(pairs.size()); }
};

// Peel got stuck: `remaining` lists the surviving vertices, every one of
// degree >= 2 in the induced subgraph.
struct PeelFailure {
    bool odd_vertex_count = false;
    std::vector<VertexRef> remaining;
};

std::variant<OrderedMatching, PeelFailure> peel(const BipartiteGraph& g);

struct Condition1Witness {
    int pair_index;  // 0-based i
    int a_vertex;    // u in N(y_i), A side
    int b_vertex;    // v in N(x_i), B side, u not adjacent to v
};

struct Condition2Witness {
    int i, j;  // 0-based, i < j, x_i ~ y_j and x_j ~ y_i
};

std::optional<Condition1Witness> check_condition1(const BipartiteGraph& g,
                                                  const OrderedMatching& m);
std::optional<Condition2Witness> check_condition2(const BipartiteGraph& g,
                                                  const OrderedMatching& m);

struct Witness {
    enum class Kind {
        odd_or_unbalanced,
        no_perfect_matching,
        peel_stuck,
        condition1,
        condition2,
    };
    Kind kind;
    std::optional<HallViolator> hall;
    std::optional<PeelFailure> peel;
    std::optional<Condition1Witness> c1;
    std::optional<Condition2Witness> c2;
};

struct Certificate {
    OrderedMatching matching;
    std::vector<int> hh_order;  // permutation of 0..n-1, position -> original pair
};

struct Verdict {
    bool is_cm = false;
    bool is_unmixed = false;
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
};

Verdict is_cohen_macaulay(const BipartiteGraph& g);

struct UnmixedResult {
    bool unmixed = false;
    std::optional<OrderedMatching> matching;  // the checked matching when unmixed
    std::optional<Witness> witness;
};

UnmixedResult is_unmixed(const BipartiteGraph& g);

// Relabeling of pair indices under which x_i ~ y_j implies i <= j and the
// transitivity condition holds. On success returns the permutation (position
// -> original pair index); a cycle in the cross-edge digraph is returned
// otherwise and means the preconditions (conditions 1 and 2) were violated.
struct HhOrderResult {
    std::optional<std::vector<int>> order;
    std::vector<int> cycle;
};

HhOrderResult find_hh_order(const BipartiteGraph& g, const OrderedMatching& m);

// All three conditions: x_i ~ y_i, x_i ~ y_j => i <= j, and transitivity.
bool verify_hh_order(const BipartiteGraph& g, const OrderedMatching& m,
                     const std::vector<int>& order);

// x_i ~ y_i plus transitivity only (no upper-triangular requirement).
bool verify_villarreal_order(const BipartiteGraph& g, const OrderedMatching& m,
                             const std::vector<int>& order);

}  // namespace cmbip
