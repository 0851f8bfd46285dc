#include "cmbip/report.hpp"

namespace cmbip {

json graph_record(const BipartiteGraph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
    return {{"part_a", g.part_a_size()},
            {"part_b", g.part_b_size()},
            {"edges", edges}};
}

json vertex_record(VertexRef v) {
    return std::string(v.side == Side::A ? "a" : "b") + std::to_string(v.index + 1);
}

json matching_record(const OrderedMatching& m) {
    json pairs = json::array();
    for (auto [a, b] : m.pairs) pairs.push_back({a + 1, b + 1});
    return pairs;
}

json certificate_record(const Certificate& cert) {
    json order = json::array();
    for (int i : cert.hh_order) order.push_back(i + 1);
    return {{"matching", matching_record(cert.matching)},
            {"hh_order", order},
            {"conditions", {{"c1", "ok"}, {"c2", "ok"}}}};
}

json witness_record(const Witness& w) {
    json data = json::object();
    const char* kind = "";
    switch (w.kind) {
        case Witness::Kind::odd_or_unbalanced:
            kind = "odd_or_unbalanced";
            break;
        case Witness::Kind::no_perfect_matching: {
            kind = "no_perfect_matching";
            json subset = json::array(), nbhd = json::array();
            for (int a : w.hall->subset) subset.push_back(a + 1);
            for (int b : w.hall->neighborhood) nbhd.push_back(b + 1);
            data["hall_violator"] = {{"subset", subset}, {"neighborhood", nbhd}};
            break;
        }
        case Witness::Kind::peel_stuck: {
            kind = "peel_stuck";
            json rem = json::array();
            for (auto v : w.peel->remaining) rem.push_back(vertex_record(v));
            data["remaining"] = rem;
            data["remaining_size"] = w.peel->remaining.size();
            data["min_degree_at_least"] = 2;
            break;
        }
        case Witness::Kind::condition1:
            kind = "condition1";
            data["pair_index"] = w.c1->pair_index + 1;
            data["non_adjacent"] = {vertex_record({Side::A, w.c1->a_vertex}),
                                    vertex_record({Side::B, w.c1->b_vertex})};
            break;
        case Witness::Kind::condition2:
            kind = "condition2";
            data["i"] = w.c2->i + 1;
            data["j"] = w.c2->j + 1;
            break;
    }
    return {{"kind", kind}, {"data", data}};
}

json verdict_record(const Verdict& v) {
    json out = {{"is_cm", v.is_cm}, {"is_unmixed", v.is_unmixed}};
    if (v.certificate) out["certificate"] = certificate_record(*v.certificate);
    if (v.witness) out["witness"] = witness_record(*v.witness);
    return out;
}

json complex_record(const SimplicialComplex& c) {
    json facets = json::array();
    for (auto f : c.facets) {
        json verts = json::array();
        for (int v = 0; v < c.vertex_count; ++v)
            if (f & (std::uint64_t(1) << v)) verts.push_back(v + 1);
        facets.push_back(verts);
    }
    return {{"vertex_count", c.vertex_count}, {"facets", facets}};
}

}  // namespace cmbip
