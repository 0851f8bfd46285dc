#include "cmbip/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cmbip {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const BipartiteGraph& g;
    int na, nb;
    std::vector<int> match_a, match_b;  // -1 = free
    std::vector<int> dist;

    explicit HopcroftKarp(const BipartiteGraph& graph)
        : g(graph),
          na(graph.part_a_size()),
          nb(graph.part_b_size()),
          match_a(na, -1),
          match_b(nb, -1),
          dist(na) {}

    bool bfs() {
        std::queue<int> q;
        for (int a = 0; a < na; ++a) {
            if (match_a[a] < 0) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            const Bitset& nbrs = g.neighbors_of_a(a);
            for (int b = nbrs.find_first(); b >= 0; b = nbrs.find_next(b + 1)) {
                int a2 = match_b[b];
                if (a2 < 0) {
                    found = true;
                } else if (dist[a2] == kInf) {
                    dist[a2] = dist[a] + 1;
                    q.push(a2);
                }
            }
        }
        return found;
    }

    bool dfs(int a) {
        const Bitset& nbrs = g.neighbors_of_a(a);
        for (int b = nbrs.find_first(); b >= 0; b = nbrs.find_next(b + 1)) {
            int a2 = match_b[b];
            if (a2 < 0 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
                match_a[a] = b;
                match_b[b] = a;
                return true;
            }
        }
        dist[a] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (int a = 0; a < na; ++a)
                if (match_a[a] < 0) dfs(a);
    }
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
    HopcroftKarp hk(g);
    hk.run();
    Matching m;
    for (int a = 0; a < hk.na; ++a)
        if (hk.match_a[a] >= 0) m.pairs.emplace_back(a, hk.match_a[a]);
    return m;
}

std::optional<HallViolator> hall_violator(const BipartiteGraph& g) {
    if (g.part_a_size() != g.part_b_size())
        throw UnbalancedParts("hall_violator requires balanced parts");
    HopcroftKarp hk(g);
    hk.run();
    int na = g.part_a_size();
    bool perfect = true;
    for (int a = 0; a < na; ++a)
        if (hk.match_a[a] < 0) perfect = false;
    if (perfect) return std::nullopt;

    // Alternating reachability from free A-vertices: A via non-matching edges
    // to B, B via matching edges back to A. The reachable A-set violates Hall:
    // its whole neighborhood is reachable and matched.
    std::vector<bool> seen_a(na, false), seen_b(g.part_b_size(), false);
    std::queue<int> q;
    for (int a = 0; a < na; ++a)
        if (hk.match_a[a] < 0) {
            seen_a[a] = true;
            q.push(a);
        }
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        const Bitset& nbrs = g.neighbors_of_a(a);
        for (int b = nbrs.find_first(); b >= 0; b = nbrs.find_next(b + 1)) {
            if (seen_b[b]) continue;
            seen_b[b] = true;
            int a2 = hk.match_b[b];
            if (a2 >= 0 && !seen_a[a2]) {
                seen_a[a2] = true;
                q.push(a2);
            }
        }
    }
    HallViolator v;
    for (int a = 0; a < na; ++a)
        if (seen_a[a]) v.subset.push_back(a);
    for (int b = 0; b < g.part_b_size(); ++b)
        if (seen_b[b]) v.neighborhood.push_back(b);
    return v;
}

namespace {

struct PmSearch {
    const BipartiteGraph& g;
    std::uint64_t cap;
    int n;
    std::vector<int> match_a, match_b;
    PmEnumeration out;

    PmSearch(const BipartiteGraph& graph, std::uint64_t cap_)
        : g(graph),
          cap(cap_),
          n(graph.part_a_size()),
          match_a(n, -1),
          match_b(n, -1) {}

    // Count of uncovered neighbors; -1 if the vertex is covered.
    int free_degree(Side side, int i) const {
        const Bitset& nbrs =
            side == Side::A ? g.neighbors_of_a(i) : g.neighbors_of_b(i);
        const std::vector<int>& other = side == Side::A ? match_b : match_a;
        int d = 0;
        for (int v = nbrs.find_first(); v >= 0; v = nbrs.find_next(v + 1))
            if (other[v] < 0) ++d;
        return d;
    }

    void record() {
        Matching m;
        for (int a = 0; a < n; ++a) m.pairs.emplace_back(a, match_a[a]);
        out.matchings.push_back(std::move(m));
    }

    // Returns false once the cap is hit.
    bool recurse(int covered) {
        if (covered == n) {
            if (static_cast<std::uint64_t>(out.matchings.size()) == cap) {
                out.truncated = true;
                return false;
            }
            record();
            return true;
        }
        // Branch on the uncovered vertex with the fewest uncovered neighbors;
        // ties to the lowest (A side first, then index).
        Side best_side = Side::A;
        int best = -1, best_deg = kInf;
        for (int a = 0; a < n && best_deg > 1; ++a)
            if (match_a[a] < 0) {
                int d = free_degree(Side::A, a);
                if (d < best_deg) {
                    best_deg = d;
                    best_side = Side::A;
                    best = a;
                }
            }
        for (int b = 0; b < n && best_deg > 1; ++b)
            if (match_b[b] < 0) {
                int d = free_degree(Side::B, b);
                if (d < best_deg) {
                    best_deg = d;
                    best_side = Side::B;
                    best = b;
                }
            }
        if (best_deg == 0) return true;  // dead branch
        const Bitset& nbrs = best_side == Side::A ? g.neighbors_of_a(best)
                                                  : g.neighbors_of_b(best);
        for (int v = nbrs.find_first(); v >= 0; v = nbrs.find_next(v + 1)) {
            int a = best_side == Side::A ? best : v;
            int b = best_side == Side::A ? v : best;
            if (match_a[a] >= 0 || match_b[b] >= 0) continue;
            match_a[a] = b;
            match_b[b] = a;
            bool keep = recurse(covered + 1);
            match_a[a] = -1;
            match_b[b] = -1;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

PmEnumeration enumerate_perfect_matchings(const BipartiteGraph& g,
                                          std::uint64_t cap) {
    if (g.part_a_size() != g.part_b_size()) return {};
    if (g.part_a_size() == 0) {
        PmEnumeration e;
        e.matchings.push_back(Matching{});  // empty graph: one empty matching
        return e;
    }
    PmSearch s(g, cap);
    s.recurse(0);
    std::sort(s.out.matchings.begin(), s.out.matchings.end(),
              [](const Matching& x, const Matching& y) { return x.pairs < y.pairs; });
    return s.out;
}

PmUniqueness has_unique_perfect_matching(const BipartiteGraph& g) {
    PmEnumeration e = enumerate_perfect_matchings(g, 2);
    if (e.matchings.empty()) return PmUniqueness::none;
    return e.matchings.size() == 1 ? PmUniqueness::unique : PmUniqueness::multiple;
}

}  // namespace cmbip
