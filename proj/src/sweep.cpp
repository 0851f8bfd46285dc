#include "cmbip/sweep.hpp"

#include <thread>
#include <unordered_map>

#include "cmbip/cm_check.hpp"
#include "cmbip/generators.hpp"
#include "cmbip/matching.hpp"
#include "cmbip/oracles.hpp"

namespace cmbip {

SweepCounts& SweepCounts::operator+=(const SweepCounts& o) {
    total += o.total;
    cm += o.cm;
    unmixed += o.unmixed;
    unmixed_not_cm += o.unmixed_not_cm;
    reisner_disagreements += o.reisner_disagreements;
    purity_disagreements += o.purity_disagreements;
    corollary_failures += o.corollary_failures;
    zero_divisor_failures += o.zero_divisor_failures;
    return *this;
}

SweepCounts sweep_one(const BipartiteGraph& g, const SweepOptions& opt) {
    SweepCounts c;
    c.total = 1;
    Verdict v = is_cohen_macaulay(g);
    if (v.is_cm) ++c.cm;
    if (v.is_unmixed) ++c.unmixed;
    if (v.is_unmixed && !v.is_cm) ++c.unmixed_not_cm;

    SimplicialComplex complex = independence_complex(g);
    if (is_pure(complex).pure != v.is_unmixed) ++c.purity_disagreements;
    if (reisner_is_cm(complex).cm != v.is_cm) ++c.reisner_disagreements;

    Matching mm = max_matching(g);
    bool has_pm = mm.perfect_for(g);
    OrderedMatching om{mm.pairs, OrderedMatching::Provenance::supplied};

    if (opt.corollaries && v.is_unmixed) {
        bool unique = has_unique_perfect_matching(g) == PmUniqueness::unique;
        if (unique != v.is_cm) ++c.corollary_failures;
        if (has_pm) {
            bool all_connected = true;
            for (int i = 0; i < om.size() && all_connected; ++i)
                for (int j = i + 1; j < om.size(); ++j)
                    if (!complement_connected_on_pairs(g, om.pairs[i], om.pairs[j])) {
                        all_connected = false;
                        break;
                    }
            if (all_connected != v.is_cm) ++c.corollary_failures;
            if (!is_completely_balanced(complex, om, g.part_a_size()))
                ++c.corollary_failures;
        }
    }

    if (opt.zero_divisor && has_pm && g.part_a_size() > 0) {
        QuadraticMonomialIdeal ideal = edge_ideal(g);
        bool any_zero_divisor = false;
        for (auto [x, y] : om.pairs)
            if (is_zero_divisor_sum(ideal, x, g.part_a_size() + y)) {
                any_zero_divisor = true;
                break;
            }
        bool cond1_ok = !check_condition1(g, om).has_value();
        if (cond1_ok != !any_zero_divisor) ++c.zero_divisor_failures;
    }
    return c;
}

namespace {

std::uint64_t graph_key(const BipartiteGraph& g) {
    std::uint64_t mask = 0;
    for (auto [a, b] : g.edges())
        mask |= std::uint64_t(1) << (a * g.part_b_size() + b);
    return mask | (std::uint64_t(g.part_a_size()) << 16) |
           (std::uint64_t(g.part_b_size()) << 21);
}

SweepCounts sweep_range(int na, int nb, std::uint32_t lo, std::uint32_t hi,
                        const SweepOptions& opt) {
    SweepCounts acc;
    // Many ranks normalize to the same graph; cache per worker.
    std::unordered_map<std::uint64_t, SweepCounts> cache;
    for (std::uint32_t rank = lo; rank < hi; ++rank) {
        NormalizeResult nr = graph_from_rank(na, nb, rank);
        std::uint64_t key = graph_key(nr.graph);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, sweep_one(nr.graph, opt)).first;
        acc += it->second;
    }
    return acc;
}

}  // namespace

SweepCounts run_sweep(int na, int nb, const SweepOptions& opt) {
    int cells = na * nb;
    if (cells > kSweepCellBound) throw GraphError("sweep bound exceeded");
    std::uint32_t total = std::uint32_t(1) << cells;
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) return sweep_range(na, nb, 0, total, opt);

    std::vector<SweepCounts> parts(jobs);
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t(total) * t / jobs);
        std::uint32_t hi =
            static_cast<std::uint32_t>(std::uint64_t(total) * (t + 1) / jobs);
        workers.emplace_back(
            [&, t, lo, hi] { parts[t] = sweep_range(na, nb, lo, hi, opt); });
    }
    for (auto& w : workers) w.join();
    SweepCounts acc;
    for (const auto& p : parts) acc += p;
    return acc;
}

}  // namespace cmbip
