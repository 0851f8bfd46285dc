#include "cmbip/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cmbip {

BipartiteGraph BipartiteGraph::from_edges(int part_a_size, int part_b_size,
                                          std::vector<std::pair<int, int>> edges) {
    if (part_a_size < 0 || part_b_size < 0)
        throw GraphError("negative part size");
    BipartiteGraph g;
    g.na_ = part_a_size;
    g.nb_ = part_b_size;
    g.adj_a_.assign(part_a_size, Bitset(part_b_size));
    g.adj_b_.assign(part_b_size, Bitset(part_a_size));
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= part_a_size || b < 0 || b >= part_b_size)
            throw GraphError("edge endpoint out of range: (" + std::to_string(a + 1) +
                             ", " + std::to_string(b + 1) + ")");
        if (g.adj_a_[a].test(b))
            throw GraphError("duplicate edge: (" + std::to_string(a + 1) + ", " +
                             std::to_string(b + 1) + ")");
        g.adj_a_[a].set(b);
        g.adj_b_[b].set(a);
    }
    g.edges_ = std::move(edges);
    return g;
}

std::vector<VertexRef> BipartiteGraph::neighbors(VertexRef v) const {
    if (!valid_ref(v)) throw GraphError("invalid vertex reference");
    const Bitset& adj = v.side == Side::A ? adj_a_[v.index] : adj_b_[v.index];
    Side other = v.side == Side::A ? Side::B : Side::A;
    std::vector<VertexRef> out;
    for (int i = adj.find_first(); i >= 0; i = adj.find_next(i + 1))
        out.push_back({other, i});
    return out;
}

NormalizeResult normalize(const BipartiteGraph& g) {
    std::vector<int> map_a(g.part_a_size(), -1), map_b(g.part_b_size(), -1);
    NormalizeResult res;
    int na = 0, nb = 0;
    for (int a = 0; a < g.part_a_size(); ++a) {
        if (g.neighbors_of_a(a).none())
            res.stripped.push_back({Side::A, a});
        else
            map_a[a] = na++;
    }
    for (int b = 0; b < g.part_b_size(); ++b) {
        if (g.neighbors_of_b(b).none())
            res.stripped.push_back({Side::B, b});
        else
            map_b[b] = nb++;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [a, b] : g.edges()) edges.emplace_back(map_a[a], map_b[b]);
    res.graph = BipartiteGraph::from_edges(na, nb, std::move(edges));
    return res;
}

NormalizeResult parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int na = -1, nb = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok == "c") continue;
        if (tok == "p") {
            if (na >= 0) throw ParseError(line_no, "duplicate header");
            std::string kind;
            if (!(ls >> kind >> na >> nb >> m) || kind != "bip" || na < 0 ||
                nb < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected 'p bip <nA> <nB> <m>'");
        } else if (tok == "e") {
            if (na < 0) throw ParseError(line_no, "edge before header");
            int a, b;
            if (!(ls >> a >> b))
                throw ParseError(line_no, "malformed edge line");
            if (a < 1 || a > na || b < 1 || b > nb)
                throw ParseError(line_no, "edge endpoint out of range");
            edges.emplace_back(a - 1, b - 1);
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown line type '" + tok + "'");
        }
    }
    if (na < 0) throw ParseError(line_no, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "edge count mismatch: header says " +
                                      std::to_string(m) + ", got " +
                                      std::to_string(edges.size()));
    // Report duplicates with the offending line number.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j])
                throw ParseError(edge_lines[j], "duplicate edge");
    BipartiteGraph raw = BipartiteGraph::from_edges(na, nb, std::move(edges));
    return normalize(raw);
}

NormalizeResult parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "p bip " << g.part_a_size() << " " << g.part_b_size() << " "
        << g.edge_count() << "\n";
    for (auto [a, b] : g.edges()) out << "e " << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

std::optional<std::pair<int, int>> is_complete_between(const BipartiteGraph& g,
                                                       const Bitset& as,
                                                       const Bitset& bs) {
    for (int a = as.find_first(); a >= 0; a = as.find_next(a + 1)) {
        if (a >= g.part_a_size()) throw GraphError("invalid vertex reference");
        int missing = bs.find_first_not_in(g.neighbors_of_a(a));
        if (missing >= 0) {
            if (missing >= g.part_b_size())
                throw GraphError("invalid vertex reference");
            return std::make_pair(a, missing);
        }
    }
    return std::nullopt;
}

bool complement_connected_on_pairs(const BipartiteGraph& g,
                                   std::pair<int, int> e1,
                                   std::pair<int, int> e2) {
    auto [a1, b1] = e1;
    auto [a2, b2] = e2;
    if (!g.has_edge(a1, b1) || !g.has_edge(a2, b2))
        throw GraphError("pair is not an edge");
    if (a1 == a2 || b1 == b2) throw GraphError("pairs are not vertex-disjoint");
    // Vertices 0 = a1, 1 = b1, 2 = a2, 3 = b2. Complement within K4: same-side
    // pairs (a1,a2), (b1,b2) are always complement edges; cross pairs are
    // complement edges iff absent from g. (a1,b1), (a2,b2) are edges of g.
    bool comp[4][4] = {};
    auto link = [&](int u, int v) { comp[u][v] = comp[v][u] = true; };
    link(0, 2);
    link(1, 3);
    if (!g.has_edge(a1, b2)) link(0, 3);
    if (!g.has_edge(a2, b1)) link(2, 1);
    // BFS from vertex 0 over <= 4 vertices.
    bool seen[4] = {true, false, false, false};
    int stack[4] = {0};
    int top = 1, reached = 1;
    while (top) {
        int u = stack[--top];
        for (int v = 0; v < 4; ++v)
            if (comp[u][v] && !seen[v]) {
                seen[v] = true;
                stack[top++] = v;
                ++reached;
            }
    }
    return reached == 4;
}

}  // namespace cmbip
