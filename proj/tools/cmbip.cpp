#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cmbip/cm_check.hpp"
#include "cmbip/generators.hpp"
#include "cmbip/matching.hpp"
#include "cmbip/oracles.hpp"
#include "cmbip/report.hpp"
#include "cmbip/sweep.hpp"

namespace {

using namespace cmbip;

constexpr int kExitCm = 0;
constexpr int kExitNotCm = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitDisagreement = 4;

NormalizeResult read_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

json stripped_record(const std::vector<VertexRef>& stripped) {
    json arr = json::array();
    for (auto v : stripped) arr.push_back(vertex_record(v));
    return arr;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_check(const std::string& path, bool with_oracle,
              const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    NormalizeResult nr = read_graph(path);
    const BipartiteGraph& g = nr.graph;
    Verdict v = is_cohen_macaulay(g);

    bool disagree = false;
    json oracle_block;
    if (with_oracle) {
        SimplicialComplex complex = independence_complex(g);
        bool pure = is_pure(complex).pure;
        bool reisner = reisner_is_cm(complex).cm;
        disagree = pure != v.is_unmixed || reisner != v.is_cm;
        oracle_block = {{"pure", pure},
                        {"reisner", reisner},
                        {"agrees", !disagree}};
    }

    json report = {{"input", path},
                   {"graph", graph_record(g)},
                   {"stripped", stripped_record(nr.stripped)}};
    json verdict = verdict_record(v);
    report.update(verdict);
    if (with_oracle) report["oracle"] = oracle_block;
    report["timing_ms"] = elapsed_ms(start);

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (v.is_cm ? "G is Cohen-Macaulay" : "G is not Cohen-Macaulay")
                  << "\n";
        std::cout << "unmixed: " << (v.is_unmixed ? "yes" : "no") << "\n";
        if (v.certificate)
            std::cout << "certificate: " << certificate_record(*v.certificate).dump()
                      << "\n";
        if (v.witness)
            std::cout << "witness: " << witness_record(*v.witness).dump() << "\n";
        if (with_oracle)
            std::cout << "oracle: " << oracle_block.dump() << "\n";
    }
    if (disagree) return kExitDisagreement;
    return v.is_cm ? kExitCm : kExitNotCm;
}

int cmd_oracle(const std::string& path, bool with_betti, bool with_shellable,
               const std::string& format) {
    NormalizeResult nr = read_graph(path);
    const BipartiteGraph& g = nr.graph;
    SimplicialComplex complex = independence_complex(g);
    PurityResult purity = is_pure(complex);
    ReisnerResult reisner = reisner_is_cm(complex);

    json report = {{"input", path},
                   {"graph", graph_record(g)},
                   {"complex", complex_record(complex)},
                   {"purity", purity.pure},
                   {"reisner", reisner.cm}};
    if (reisner.failing) {
        json verts = json::array();
        for (int v = 0; v < complex.vertex_count; ++v)
            if (reisner.failing->first & (std::uint64_t(1) << v))
                verts.push_back(v + 1);
        report["failing_face"] = {{"face", verts},
                                  {"dimension", reisner.failing->second}};
    }
    Matching mm = max_matching(g);
    if (mm.perfect_for(g)) {
        OrderedMatching om{mm.pairs, OrderedMatching::Provenance::supplied};
        report["balanced"] = is_completely_balanced(complex, om, g.part_a_size());
    }
    if (with_betti) {
        BettiVector bv = reduced_homology(complex);
        json betti = json::array();
        for (auto b : bv.betti) betti.push_back(b);
        report["betti"] = betti;  // index 0 is dimension -1
    }
    if (with_shellable) {
        switch (is_shellable_bruteforce(complex)) {
            case Shellability::yes:
                report["shellable"] = true;
                break;
            case Shellability::no:
                report["shellable"] = false;
                break;
            case Shellability::cap_exceeded:
                report["shellable"] = "cap_exceeded";
                break;
        }
    }
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return kExitCm;
}

void write_graph_file(std::ostream& out, const BipartiteGraph& g,
                      const std::string& provenance) {
    out << "c generator: " << provenance << "\n" << serialize_graph(g);
}

int cmd_generate(const std::string& kind, int na, int nb, int n, double p,
                 std::uint64_t seed, bool chain, const std::string& out_path,
                 const std::string& split_dir) {
    std::ostringstream buf;
    if (kind == "random") {
        NormalizeResult nr = random_bipartite(na, nb, p, seed);
        std::ostringstream prov;
        prov << "random nA=" << na << " nB=" << nb << " p=" << p
             << " seed=" << seed << " rng=" << SplitMix64::kAlgorithmId;
        write_graph_file(buf, nr.graph, prov.str());
    } else if (kind == "poset") {
        PosetSpec ps = chain ? chain_poset(n) : random_poset(n, p, seed);
        BipartiteGraph g = poset_graph(ps);
        std::ostringstream prov;
        prov << "poset n=" << n;
        if (chain)
            prov << " chain";
        else
            prov << " p=" << p << " seed=" << seed
                 << " rng=" << SplitMix64::kAlgorithmId;
        write_graph_file(buf, g, prov.str());
    } else if (kind == "grid-all") {
        if (!split_dir.empty()) {
            all_bipartite_graphs(na, nb, [&](std::uint32_t rank,
                                             const NormalizeResult& nr) {
                std::ostringstream name;
                name << split_dir << "/grid-" << na << "x" << nb << "-" << rank
                     << ".bip";
                std::ofstream f(name.str());
                std::ostringstream prov;
                prov << "grid-all nA=" << na << " nB=" << nb << " rank=" << rank;
                write_graph_file(f, nr.graph, prov.str());
            });
            return kExitCm;
        }
        all_bipartite_graphs(
            na, nb, [&](std::uint32_t rank, const NormalizeResult& nr) {
                std::ostringstream prov;
                prov << "grid-all nA=" << na << " nB=" << nb << " rank=" << rank;
                write_graph_file(buf, nr.graph, prov.str());
            });
    } else {
        std::cerr << "unknown generator kind '" << kind << "'\n";
        return kExitInputError;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return kExitInputError;
        }
        f << buf.str();
    }
    return kExitCm;
}

int cmd_sweep(int na, int nb, int jobs, const std::string& format) {
    SweepOptions opt;
    opt.jobs = jobs;
    SweepCounts c = run_sweep(na, nb, opt);
    json report = {{"na", na},
                   {"nb", nb},
                   {"total", c.total},
                   {"cm", c.cm},
                   {"unmixed", c.unmixed},
                   {"unmixed_not_cm", c.unmixed_not_cm},
                   {"disagreements", c.disagreements()}};
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << "sweep " << na << "x" << nb << ": total " << c.total
                  << ", cm " << c.cm << ", unmixed " << c.unmixed
                  << ", unmixed-not-cm " << c.unmixed_not_cm
                  << ", disagreements " << c.disagreements() << "\n";
    return c.disagreements() ? kExitDisagreement : kExitCm;
}

int cmd_matchings(const std::string& path, std::uint64_t cap,
                  const std::string& format) {
    NormalizeResult nr = read_graph(path);
    PmEnumeration e = enumerate_perfect_matchings(nr.graph, cap);
    json list = json::array();
    for (const auto& m : e.matchings) {
        json pairs = json::array();
        for (auto [a, b] : m.pairs) pairs.push_back({a + 1, b + 1});
        list.push_back(pairs);
    }
    json report = {{"input", path},
                   {"count", e.matchings.size()},
                   {"truncated", e.truncated},
                   {"matchings", list}};
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return kExitCm;
}

int cmd_hh_order(const std::string& path, const std::string& format) {
    NormalizeResult nr = read_graph(path);
    Verdict v = is_cohen_macaulay(nr.graph);
    if (!v.is_cm) {
        json report = {{"input", path}, {"is_cm", false}};
        if (v.witness) report["witness"] = witness_record(*v.witness);
        std::cout << report.dump(2) << "\n";
        return kExitNotCm;
    }
    json report = {{"input", path},
                   {"is_cm", true},
                   {"certificate", certificate_record(*v.certificate)}};
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return kExitCm;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulayness checker for bipartite graphs"};
    app.require_subcommand(1);

    std::string path = "-", format = "text", out_path, split_dir;
    std::string kind;
    bool with_oracle = false, with_betti = false, with_shellable = false,
         chain = false;
    int na = 2, nb = 2, n = 2;
    double p = 0.5;
    std::uint64_t seed = 0, cap = kDefaultPmCap;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    auto* check = app.add_subcommand("check", "Decide Cohen-Macaulayness");
    check->add_option("path", path, "graph file ('-' for stdin)");
    check->add_flag("--oracle", with_oracle, "cross-check with purity/Reisner oracles");
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Brute-force oracle report");
    oracle->add_option("path", path);
    oracle->add_flag("--betti", with_betti);
    oracle->add_flag("--shellable", with_shellable);
    oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gen = app.add_subcommand("generate", "Emit graphs in the text format");
    gen->add_option("kind", kind)->required()->check(
        CLI::IsMember({"grid-all", "random", "poset"}));
    gen->add_option("--na", na);
    gen->add_option("--nb", nb);
    gen->add_option("--n", n);
    gen->add_option("--p", p);
    gen->add_option("--seed", seed);
    gen->add_flag("--chain", chain, "chain poset instead of a random one");
    gen->add_option("--out", out_path);
    gen->add_option("--split", split_dir, "write one file per graph (grid-all)");

    auto* sweep = app.add_subcommand("sweep", "Exhaustive checker-vs-oracle sweep");
    sweep->add_option("--na", na)->required();
    sweep->add_option("--nb", nb)->required();
    sweep->add_option("--jobs", jobs);
    sweep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* matchings = app.add_subcommand("matchings", "Enumerate perfect matchings");
    matchings->add_option("path", path);
    matchings->add_option("--cap", cap);
    matchings->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* hh = app.add_subcommand("hh-order", "Print the certificate ordering");
    hh->add_option("path", path);
    hh->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path, with_oracle, format);
        if (oracle->parsed())
            return cmd_oracle(path, with_betti, with_shellable, format);
        if (gen->parsed())
            return cmd_generate(kind, na, nb, n, p, seed, chain, out_path,
                                split_dir);
        if (sweep->parsed()) return cmd_sweep(na, nb, jobs, format);
        if (matchings->parsed()) return cmd_matchings(path, cap, format);
        if (hh->parsed()) return cmd_hh_order(path, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapExceeded& e) {
        std::cerr << "oracle cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
