#pragma once

#include <nlohmann/json.hpp>

#include "cmbip/cm_check.hpp"
#include "cmbip/graph.hpp"
#include "cmbip/oracles.hpp"

namespace cmbip {

using json = nlohmann::ordered_json;

// {part_a, part_b, edges: [[a, b], ...]} with 1-based indices, sorted.
json graph_record(const BipartiteGraph& g);

json vertex_record(VertexRef v);
json matching_record(const OrderedMatching& m);
json certificate_record(const Certificate& cert);
json witness_record(const Witness& w);
json verdict_record(const Verdict& v);

// Complex facets as sorted 1-based vertex index lists (A: 1..nA,
// B: nA+1..nA+nB).
json complex_record(const SimplicialComplex& c);

}  // namespace cmbip
