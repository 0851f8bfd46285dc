// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "cmbip/cm_check.hpp"
#include "cmbip/generators.hpp"
#include "cmbip/matching.hpp"
#include "cmbip/oracles.hpp"
#include "cmbip/sweep.hpp"
#include "test_util.hpp"

using namespace cmbip;
using namespace cmbip::testutil;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Structural consequences on a CM verdict (criterion 5), applied to every CM
// instance the suite encounters.
bool structural_ok(const BipartiteGraph& g, const Verdict& v,
                   std::string& why) {
    if (!v.is_cm || g.part_a_size() == 0) return true;
    bool deg1_a = false, deg1_b = false;
    for (int a = 0; a < g.part_a_size(); ++a)
        if (g.neighbors_of_a(a).count() == 1) deg1_a = true;
    for (int b = 0; b < g.part_b_size(); ++b)
        if (g.neighbors_of_b(b).count() == 1) deg1_b = true;
    if (!deg1_a || !deg1_b) {
        why = "missing degree-1 vertex in a part";
        return false;
    }
    auto e = enumerate_perfect_matchings(g, 2);
    if (e.matchings.size() != 1) {
        why = "CM instance without a unique perfect matching";
        return false;
    }
    auto peeled_pairs = v.certificate->matching.pairs;
    std::sort(peeled_pairs.begin(), peeled_pairs.end());
    if (peeled_pairs != e.matchings[0].pairs) {
        why = "peeled matching differs from the unique perfect matching";
        return false;
    }
    for (auto [x, y] : v.certificate->matching.pairs)
        if (!is_cohen_macaulay(delete_pair(g, x, y)).is_cm) {
            why = "deleting a matched pair broke CM";
            return false;
        }
    return true;
}

}  // namespace

int main() {
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    // Criteria 1-3: one exhaustive pass over all 2^16 edge subsets of the 4x4
    // grid; the sweep compares checker vs oracles, corollaries, and the
    // zero-divisor test per graph.
    {
        auto t0 = std::chrono::steady_clock::now();
        SweepOptions opt;
        opt.jobs = jobs;
        SweepCounts c = run_sweep(4, 4, opt);
        double secs = seconds_since(t0);
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "4x4 sweep: %llu graphs, %llu CM, %llu unmixed, "
                      "reisner/purity disagreements %llu/%llu, %.1fs",
                      (unsigned long long)c.total, (unsigned long long)c.cm,
                      (unsigned long long)c.unmixed,
                      (unsigned long long)c.reisner_disagreements,
                      (unsigned long long)c.purity_disagreements, secs);
        report(1,
               c.reisner_disagreements == 0 && c.purity_disagreements == 0 &&
                   secs <= 600.0,
               buf);
        std::snprintf(buf, sizeof(buf),
                      "corollary equivalences on unmixed graphs: %llu failures",
                      (unsigned long long)c.corollary_failures);
        report(2, c.corollary_failures == 0, buf);
        std::snprintf(buf, sizeof(buf),
                      "zero-divisor equivalence on PM graphs: %llu failures",
                      (unsigned long long)c.zero_divisor_failures);
        report(3, c.zero_divisor_failures == 0, buf);
    }

    // Criterion 5 accumulates over every CM instance seen below and in the
    // dedicated 4x4 re-enumeration.
    bool structural_pass = true;
    std::string structural_why;
    long long structural_checked = 0;
    auto structural = [&](const BipartiteGraph& g, const Verdict& v) {
        if (!v.is_cm) return;
        ++structural_checked;
        std::string why;
        if (structural_pass && !structural_ok(g, v, why)) {
            structural_pass = false;
            structural_why = why;
        }
    };

    // Criterion 4: ordering criteria on seeded random instances, n <= 5.
    {
        long long instances = 0, cm_count = 0;
        bool hh_pass = true, vill_pass = true, constructive_pass = true;
        for (std::uint64_t seed = 0; seed < 10000; ++seed) {
            int n = 2 + static_cast<int>(seed % 4);
            double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
            BipartiteGraph g = random_bipartite(n, n, p, seed ^ 0xC4ULL).graph;
            ++instances;
            Verdict v = is_cohen_macaulay(g);
            if (v.is_cm) ++cm_count;
            if (exists_order(g, true) != v.is_cm) hh_pass = false;
            if (exists_order(g, false) != v.is_unmixed) vill_pass = false;
            if (v.is_cm &&
                !verify_hh_order(g, v.certificate->matching,
                                 v.certificate->hh_order))
                constructive_pass = false;
            structural(g, v);
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%lld instances (%lld CM): HH-order %s, Villarreal %s, "
                      "constructive hh_order %s",
                      instances, cm_count, hh_pass ? "ok" : "mismatch",
                      vill_pass ? "ok" : "mismatch",
                      constructive_pass ? "verifies" : "failed");
        report(4, hh_pass && vill_pass && constructive_pass, buf);
    }

    // Criterion 6: generator soundness.
    {
        bool checker_pass = true, oracle_pass = true;
        long long oracle_checked = 0;
        std::map<std::string, bool> reisner_cache;
        for (std::uint64_t seed = 0; seed < 10000; ++seed) {
            int n = 1 + static_cast<int>(seed % 50);
            double p = 0.05 + 0.05 * static_cast<double>(seed % 10);
            BipartiteGraph g = poset_graph(random_poset(n, p, seed ^ 0x9E55ULL));
            Verdict v = is_cohen_macaulay(g);
            if (!v.is_cm) checker_pass = false;
            if (n <= 6) {
                std::string key = serialize_graph(g);
                auto it = reisner_cache.find(key);
                if (it == reisner_cache.end())
                    it = reisner_cache
                             .emplace(key, reisner_is_cm(independence_complex(g)).cm)
                             .first;
                if (!it->second) oracle_pass = false;
                ++oracle_checked;
            }
            if (n <= 12) structural(g, v);
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "10000 poset graphs accepted: checker %s; Reisner on %lld "
                      "small instances %s",
                      checker_pass ? "ok" : "rejected one", oracle_checked,
                      oracle_pass ? "ok" : "rejected one");
        report(6, checker_pass && oracle_pass, buf);
    }

    // Criterion 5 also covers every CM graph in the 4x4 grid.
    {
        std::map<std::string, bool> seen;
        all_bipartite_graphs(4, 4, [&](std::uint32_t, const NormalizeResult& nr) {
            std::string key = serialize_graph(nr.graph);
            if (!seen.emplace(key, true).second) return;
            Verdict v = is_cohen_macaulay(nr.graph);
            structural(nr.graph, v);
        });
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "structural consequences on %lld CM instances%s%s",
                      structural_checked, structural_pass ? "" : ": ",
                      structural_pass ? "" : structural_why.c_str());
        report(5, structural_pass, buf);
    }

    // Criterion 7: performance on chain-poset graphs.
    {
        BipartiteGraph big = poset_graph(chain_poset(2000));
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = is_cohen_macaulay(big);
        double secs = seconds_since(t0);
        bool cm_fast = v.is_cm && secs <= 2.0;

        // Peeling alone: doubling n at fixed density less than quadruples
        // time. Fixed density means constant edges per vertex, so use a banded
        // graph (a_i ~ b_j for i <= j <= i+3, about 4n edges) rather than the
        // chain-poset graph, whose edge count is quadratic in n.
        std::vector<int> sizes = {250, 500, 1000, 2000};
        std::vector<double> best(sizes.size(), 1e9);
        std::vector<BipartiteGraph> graphs;
        for (int n : sizes) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < std::min(i + 4, n); ++j)
                    edges.emplace_back(i, j);
            graphs.push_back(BipartiteGraph::from_edges(n, n, edges));
        }
        for (int rep = 0; rep < 9; ++rep)
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                auto p0 = std::chrono::steady_clock::now();
                auto r = peel(graphs[i]);
                double dt = seconds_since(p0);
                if (!std::holds_alternative<OrderedMatching>(r)) cm_fast = false;
                best[i] = std::min(best[i], dt);
            }
        bool scaling = true;
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
            if (best[i + 1] >= 4.0 * best[i]) scaling = false;
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "n=2000 check %.2fs (<=2s), peel times %.4f/%.4f/%.4f/%.4f s, "
                      "doubling ratios %.2f/%.2f/%.2f (<4)",
                      secs, best[0], best[1], best[2], best[3], best[1] / best[0],
                      best[2] / best[1], best[3] / best[2]);
        report(7, cm_fast && scaling, buf);
    }

    // Criterion 8: homology engine self-checks. The Euler identity is asserted
    // inside reduced_homology on every call; the fixed Betti vectors pin the
    // engine.
    {
        bool ok = true;
        SimplicialComplex circle{3, {0b011, 0b101, 0b110}};
        BettiVector bc = reduced_homology(circle);
        if (!(bc.reduced(0) == 0 && bc.reduced(1) == 1)) ok = false;
        BettiVector bk = reduced_homology(independence_complex(k22()));
        if (!(bk.reduced(0) == 1 && bk.reduced(1) == 0)) ok = false;
        // Exercise the engine (and its internal Euler check) broadly.
        try {
            all_bipartite_graphs(3, 3, [&](std::uint32_t, const NormalizeResult& nr) {
                reduced_homology(independence_complex(nr.graph));
            });
        } catch (const std::exception&) {
            ok = false;
        }
        report(8, ok,
               "hollow triangle Betti (0,1), disjoint edges (1,0), Euler identity "
               "on every processed complex");
    }

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS"
                                      : "ACCEPTANCE FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
