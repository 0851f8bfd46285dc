#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmbip/bitset.hpp"

namespace cmbip {

enum class Side { A, B };

struct VertexRef {
    Side side;
    int index;  // 0-based within the side

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend bool operator<(const VertexRef& a, const VertexRef& b) {
        if (a.side != b.side) return a.side == Side::A;
        return a.index < b.index;
    }
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
    int line;
};

// Simple bipartite graph, immutable after construction. Vertices are 0-based
// internally; every external format is 1-based.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Validates index ranges and rejects duplicate edges.
    static BipartiteGraph from_edges(int part_a_size, int part_b_size,
                                     std::vector<std::pair<int, int>> edges);

    int part_a_size() const { return na_; }
    int part_b_size() const { return nb_; }
    int vertex_count() const { return na_ + nb_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int a, int b) const { return adj_a_[a].test(b); }

    const Bitset& neighbors_of_a(int a) const { return adj_a_[a]; }
    const Bitset& neighbors_of_b(int b) const { return adj_b_[b]; }

    int degree(VertexRef v) const {
        return v.side == Side::A ? adj_a_[v.index].count() : adj_b_[v.index].count();
    }

    std::vector<VertexRef> neighbors(VertexRef v) const;

    bool valid_ref(VertexRef v) const {
        return v.index >= 0 && v.index < (v.side == Side::A ? na_ : nb_);
    }

    friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
        return x.na_ == y.na_ && x.nb_ == y.nb_ && x.edges_ == y.edges_;
    }

private:
    int na_ = 0;
    int nb_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adj_a_;  // per A-vertex, bits over B
    std::vector<Bitset> adj_b_;
};

struct NormalizeResult {
    BipartiteGraph graph;
    std::vector<VertexRef> stripped;  // isolated vertices of the input, original indices
};

// Strips isolated vertices and compacts indices on both sides.
NormalizeResult normalize(const BipartiteGraph& g);

// Text format:
//   p bip <nA> <nB> <m>
//   e <a> <b>        (1-based, m lines)
//   c ...            (comments), blank lines ignored
// The returned graph is normalized; stripped vertices are reported.
NormalizeResult parse_graph(std::istream& in);
NormalizeResult parse_graph(const std::string& text);

std::string serialize_graph(const BipartiteGraph& g);

// Missing pair witness for completeness between two vertex sets: nullopt means
// every (a, b) with a in as, b in bs is an edge.
std::optional<std::pair<int, int>> is_complete_between(const BipartiteGraph& g,
                                                       const Bitset& as,
                                                       const Bitset& bs);

// True iff the complement of the induced subgraph on the four vertices of the
// disjoint edges e1 = (a1, b1), e2 = (a2, b2) is connected.
bool complement_connected_on_pairs(const BipartiteGraph& g,
                                   std::pair<int, int> e1,
                                   std::pair<int, int> e2);

}  // namespace cmbip
