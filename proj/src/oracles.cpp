#include "cmbip/oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cmbip {

int SimplicialComplex::dim() const {
    int best = -1;
    for (auto f : facets) best = std::max(best, __builtin_popcountll(f) - 1);
    return best;
}

namespace {

struct BronKerbosch {
    const std::vector<std::uint64_t>& adj;  // complement adjacency (clique graph)
    std::uint64_t cap;
    std::vector<std::uint64_t> out;

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
            if (out.size() == cap) throw CapExceeded("facet cap exceeded");
            out.push_back(r);
            return;
        }
        // Pivot: vertex of P ∪ X with most neighbors in P.
        std::uint64_t px = p | x;
        int pivot = -1, best = -1;
        for (std::uint64_t m = px; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            int c = __builtin_popcountll(p & adj[v]);
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
        std::uint64_t cand = p & ~adj[pivot];
        for (std::uint64_t m = cand; m; m &= m - 1) {
            std::uint64_t vb = m & -m;
            int v = __builtin_ctzll(vb);
            run(r | vb, p & adj[v], x & adj[v]);
            p &= ~vb;
            x |= vb;
        }
    }
};

}  // namespace

SimplicialComplex independence_complex(const BipartiteGraph& g,
                                       std::uint64_t facet_cap) {
    int n = g.vertex_count();
    if (n > 64) throw CapExceeded("more than 64 vertices");
    SimplicialComplex c;
    c.vertex_count = n;
    if (n == 0) {
        c.facets.push_back(0);  // the complex {∅}
        return c;
    }
    int na = g.part_a_size();
    // Maximal independent sets of g = maximal cliques of the complement.
    std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> comp(n);
    for (int a = 0; a < na; ++a) {
        std::uint64_t adj = 0;
        const Bitset& nb = g.neighbors_of_a(a);
        for (int b = nb.find_first(); b >= 0; b = nb.find_next(b + 1))
            adj |= std::uint64_t(1) << (na + b);
        comp[a] = full & ~adj & ~(std::uint64_t(1) << a);
    }
    for (int b = 0; b < g.part_b_size(); ++b) {
        std::uint64_t adj = 0;
        const Bitset& nb = g.neighbors_of_b(b);
        for (int a = nb.find_first(); a >= 0; a = nb.find_next(a + 1))
            adj |= std::uint64_t(1) << a;
        comp[na + b] = full & ~adj & ~(std::uint64_t(1) << (na + b));
    }
    BronKerbosch bk{comp, facet_cap, {}};
    bk.run(0, full, 0);
    c.facets = std::move(bk.out);
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

PurityResult is_pure(const SimplicialComplex& c) {
    PurityResult r;
    for (std::size_t i = 1; i < c.facets.size(); ++i)
        if (__builtin_popcountll(c.facets[i]) !=
            __builtin_popcountll(c.facets[0])) {
            r.pure = false;
            r.witness = std::make_pair(c.facets[0], c.facets[i]);
            return r;
        }
    return r;
}

bool is_completely_balanced(const SimplicialComplex& c, const OrderedMatching& m,
                            int part_a_size) {
    for (auto f : c.facets)
        for (auto [x, y] : m.pairs) {
            std::uint64_t pair_mask =
                (std::uint64_t(1) << x) | (std::uint64_t(1) << (part_a_size + y));
            if (__builtin_popcountll(f & pair_mask) != 1) return false;
        }
    return true;
}

namespace {

// Fraction-free (Bareiss) elimination rank. The int64 instantiation reports
// overflow so callers can retry with arbitrary precision.
template <typename T>
bool rank_bareiss(std::vector<std::vector<T>>& m, int& rank_out);

template <>
bool rank_bareiss<long long>(std::vector<std::vector<long long>>& m,
                             int& rank_out) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    long long prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                __int128 t = (__int128)m[r][c] * m[i][j] - (__int128)m[i][c] * m[r][j];
                t /= prev;
                if (t > INT64_MAX || t < INT64_MIN) return false;
                m[i][j] = static_cast<long long>(t);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    rank_out = r;
    return true;
}

template <>
bool rank_bareiss<mpz_class>(std::vector<std::vector<mpz_class>>& m,
                             int& rank_out) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    rank_out = r;
    return true;
}

int exact_rank(const std::vector<std::vector<long long>>& matrix) {
    int rank = 0;
    auto copy = matrix;
    if (rank_bareiss<long long>(copy, rank)) return rank;
    std::vector<std::vector<mpz_class>> big(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (long long v : matrix[i]) big[i].emplace_back(static_cast<long>(v));
    rank_bareiss<mpz_class>(big, rank);
    return rank;
}

// All faces of the complex, grouped by cardinality, each group sorted.
std::vector<std::vector<std::uint64_t>> enumerate_faces(
    const SimplicialComplex& c, std::uint64_t face_cap) {
    std::unordered_set<std::uint64_t> seen;
    for (auto f : c.facets) {
        std::uint64_t s = f;
        while (true) {
            seen.insert(s);
            if (seen.size() > face_cap) throw CapExceeded("face cap exceeded");
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::vector<std::vector<std::uint64_t>> by_card(c.vertex_count + 1);
    for (auto f : seen) by_card[__builtin_popcountll(f)].push_back(f);
    for (auto& v : by_card) std::sort(v.begin(), v.end());
    return by_card;
}

}  // namespace

BettiVector reduced_homology(const SimplicialComplex& c, std::uint64_t face_cap) {
    auto by_card = enumerate_faces(c, face_cap);
    int max_card = 0;
    for (int k = 0; k <= c.vertex_count; ++k)
        if (!by_card[k].empty()) max_card = k;

    // rank_d[k] = rank of ∂ from k-element faces to (k-1)-element faces;
    // C_{-1} = span(∅) is included, so ∂ on 1-element faces is augmentation.
    std::vector<int> rank_d(max_card + 2, 0);
    for (int k = 1; k <= max_card; ++k) {
        const auto& cols_faces = by_card[k];
        const auto& rows_faces = by_card[k - 1];
        if (cols_faces.empty() || rows_faces.empty()) continue;
        std::vector<std::vector<long long>> m(
            rows_faces.size(), std::vector<long long>(cols_faces.size(), 0));
        for (std::size_t j = 0; j < cols_faces.size(); ++j) {
            std::uint64_t f = cols_faces[j];
            int sign = 1, idx = 0;
            for (std::uint64_t rest = f; rest; rest &= rest - 1, ++idx) {
                std::uint64_t sub = f & ~(rest & -rest);
                auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                m[it - rows_faces.begin()][j] = sign;
                sign = -sign;
            }
        }
        rank_d[k] = exact_rank(m);
    }

    BettiVector bv;
    bv.betti.resize(max_card + 1);
    long long chi_faces = 0, chi_betti = 0;
    for (int k = 0; k <= max_card; ++k) {
        long long nk = static_cast<long long>(by_card[k].size());
        bv.betti[k] = nk - rank_d[k] - rank_d[k + 1];
        int sgn = (k % 2 == 0) ? 1 : -1;  // dimension k-1
        chi_faces += sgn * nk;
        chi_betti += sgn * bv.betti[k];
        if (bv.betti[k] < 0)
            throw std::logic_error("negative Betti number");
    }
    if (chi_faces != chi_betti)
        throw std::logic_error("Euler characteristic mismatch in homology engine");
    return bv;
}

ReisnerResult reisner_is_cm(const SimplicialComplex& c, std::uint64_t face_cap) {
    auto by_card = enumerate_faces(c, face_cap);
    for (const auto& group : by_card)
        for (std::uint64_t face : group) {
            SimplicialComplex link;
            link.vertex_count = c.vertex_count;
            for (auto f : c.facets)
                if ((f & face) == face) link.facets.push_back(f & ~face);
            if (link.facets.empty()) continue;  // face not below any facet
            int d = link.dim();
            if (d <= -1) continue;  // face is a facet, nothing below dim -1
            BettiVector bv = reduced_homology(link, face_cap);
            for (int dim = -1; dim < d; ++dim)
                if (bv.reduced(dim) != 0)
                    return {false, std::make_pair(face, dim)};
        }
    return {true, std::nullopt};
}

QuadraticMonomialIdeal edge_ideal(const BipartiteGraph& g) {
    QuadraticMonomialIdeal ideal;
    ideal.variable_count = g.vertex_count();
    for (auto [a, b] : g.edges())
        ideal.generators.insert({a, g.part_a_size() + b});
    return ideal;
}

bool is_zero_divisor_sum(const QuadraticMonomialIdeal& I, int i, int j) {
    if (i == j) throw std::invalid_argument("is_zero_divisor_sum: i == j");
    int n = I.variable_count;
    // (i): some x_k kills both images.
    for (int k = 0; k < n; ++k)
        if (k != i && k != j && I.contains(k, i) && I.contains(k, j)) return true;
    // (ii): a square-free quadratic x_k x_l outside I with x_k x_l x_i and
    // x_k x_l x_j both inside.
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (int l = k + 1; l < n; ++l) {
            if (l == i || l == j) continue;
            if (I.contains(k, l)) continue;
            if ((I.contains(k, i) || I.contains(l, i)) &&
                (I.contains(k, j) || I.contains(l, j)))
                return true;
        }
    }
    return false;
}

namespace {

struct ShellSearch {
    const std::vector<std::uint64_t>& facets;
    int facet_size;  // cardinality, all equal (pure)
    std::vector<int> prefix;
    std::unordered_set<std::uint32_t> dead;  // facet subsets with no shelling

    bool attaches(int cand) const {
        std::uint64_t f = facets[cand];
        for (int i : prefix) {
            std::uint64_t inter = facets[i] & f;
            bool covered = false;
            for (int k : prefix) {
                std::uint64_t ridge = facets[k] & f;
                if (__builtin_popcountll(ridge) == facet_size - 1 &&
                    (inter & ~ridge) == 0) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    bool search(std::uint32_t used) {
        if (static_cast<int>(prefix.size()) == static_cast<int>(facets.size()))
            return true;
        if (dead.count(used)) return false;
        for (int cand = 0; cand < static_cast<int>(facets.size()); ++cand) {
            if (used & (std::uint32_t(1) << cand)) continue;
            if (!prefix.empty() && !attaches(cand)) continue;
            prefix.push_back(cand);
            if (search(used | (std::uint32_t(1) << cand))) return true;
            prefix.pop_back();
        }
        dead.insert(used);
        return false;
    }
};

}  // namespace

Shellability is_shellable_bruteforce(const SimplicialComplex& c, int facet_cap) {
    if (!is_pure(c).pure) return Shellability::no;
    if (static_cast<int>(c.facets.size()) > facet_cap)
        return Shellability::cap_exceeded;
    if (c.facets.size() <= 1) return Shellability::yes;
    ShellSearch s{c.facets, __builtin_popcountll(c.facets[0]), {}, {}};
    return s.search(0) ? Shellability::yes : Shellability::no;
}

}  // namespace cmbip
