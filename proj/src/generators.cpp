#include "cmbip/generators.hpp"

#include <algorithm>
#include <set>

namespace cmbip {

PosetSpec PosetSpec::make(int element_count,
                          std::vector<std::pair<int, int>> relation) {
    if (element_count < 0) throw GraphError("negative element count");
    std::set<std::pair<int, int>> rel;
    for (auto [i, j] : relation) {
        if (i < 0 || j < 0 || i >= element_count || j >= element_count || i == j)
            throw GraphError("invalid poset relation pair");
        rel.insert({i, j});
    }
    // Transitive closure (Floyd-Warshall over the boolean relation).
    std::vector<std::vector<bool>> lt(element_count,
                                      std::vector<bool>(element_count, false));
    for (auto [i, j] : rel) lt[i][j] = true;
    for (int k = 0; k < element_count; ++k)
        for (int i = 0; i < element_count; ++i)
            if (lt[i][k])
                for (int j = 0; j < element_count; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    PosetSpec ps;
    ps.element_count = element_count;
    for (int i = 0; i < element_count; ++i) {
        if (lt[i][i]) throw GraphError("poset relation has a cycle");
        for (int j = 0; j < element_count; ++j)
            if (lt[i][j]) ps.relation.emplace_back(i, j);
    }
    return ps;
}

bool PosetSpec::less(int i, int j) const {
    return std::binary_search(relation.begin(), relation.end(),
                              std::make_pair(i, j));
}

NormalizeResult graph_from_rank(int part_a_size, int part_b_size,
                                std::uint32_t rank) {
    int cells = part_a_size * part_b_size;
    if (cells > kSweepCellBound) throw GraphError("sweep bound exceeded");
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < cells; ++c)
        if (rank & (std::uint32_t(1) << c))
            edges.emplace_back(c / part_b_size, c % part_b_size);
    return normalize(
        BipartiteGraph::from_edges(part_a_size, part_b_size, std::move(edges)));
}

void all_bipartite_graphs(
    int part_a_size, int part_b_size,
    const std::function<void(std::uint32_t, const NormalizeResult&)>& fn) {
    int cells = part_a_size * part_b_size;
    if (cells > kSweepCellBound) throw GraphError("sweep bound exceeded");
    std::uint32_t total = std::uint32_t(1) << cells;
    for (std::uint32_t rank = 0; rank < total; ++rank)
        fn(rank, graph_from_rank(part_a_size, part_b_size, rank));
}

NormalizeResult random_bipartite(int part_a_size, int part_b_size,
                                 double edge_probability, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < part_a_size; ++a)
        for (int b = 0; b < part_b_size; ++b) {
            double u = rng.next_double();
            if (edge_probability >= 1.0 || u < edge_probability)
                edges.emplace_back(a, b);
        }
    return normalize(
        BipartiteGraph::from_edges(part_a_size, part_b_size, std::move(edges)));
}

BipartiteGraph poset_graph(const PosetSpec& ps) {
    int n = ps.element_count;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i);
    for (auto [i, j] : ps.relation) edges.emplace_back(i, j);
    return BipartiteGraph::from_edges(n, n, std::move(edges));
}

PosetSpec chain_poset(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return PosetSpec::make(n, std::move(rel));
}

PosetSpec random_poset(int n, double relation_probability, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = rng.next_double();
            if (relation_probability >= 1.0 || u < relation_probability)
                rel.emplace_back(i, j);
        }
    return PosetSpec::make(n, std::move(rel));
}

NormalizeResult perturb(const BipartiteGraph& g, PerturbOp op,
                        std::uint64_t seed) {
    std::vector<std::pair<int, int>> positions;
    for (int a = 0; a < g.part_a_size(); ++a)
        for (int b = 0; b < g.part_b_size(); ++b)
            if (g.has_edge(a, b) == (op == PerturbOp::remove_edge))
                positions.emplace_back(a, b);
    if (positions.empty()) throw GraphError("no applicable position");
    SplitMix64 rng(seed);
    auto [a, b] = positions[rng.next_below(positions.size())];
    std::vector<std::pair<int, int>> edges = g.edges();
    if (op == PerturbOp::add_edge) {
        edges.emplace_back(a, b);
    } else {
        edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(a, b)));
    }
    return normalize(
        BipartiteGraph::from_edges(g.part_a_size(), g.part_b_size(), std::move(edges)));
}

}  // namespace cmbip
