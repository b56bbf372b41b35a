#pragma once

#include <string>

#include <json.hpp>

#include "coarse/fatminor.hpp"
#include "coarse/graph.hpp"
#include "coarse/menger.hpp"
#include "coarse/quasiiso.hpp"
#include "coarse/treedecomp.hpp"

namespace coarse {

// The graph text format round-tripped through strings; bit-exact.
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

// {"pattern": graph text, "fatness": "num/den", "branch": {"v": [ids]},
//  "connector": {"u-v": [ids]}}
nlohmann::json model_to_json(const Graph& pattern, const MinorModel& m);
// Returns the model and writes the embedded pattern graph.
MinorModel model_from_json(const nlohmann::json& j, Graph& pattern_out);

// {"tree_edges": [[a,b]], "bags": [[ids]]}
nlohmann::json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

// {"q": "num/den", "map": [codomain id per domain id]}; the two graphs
// travel separately.
nlohmann::json map_to_json(const VertexMap& m);
// Fills map and q of a VertexMap whose graphs the caller supplies.
void map_from_json(const nlohmann::json& j, VertexMap& out);

// {"paths": [[ids]], "min_pairwise_distance": int or "inf"}
nlohmann::json spread_witness_to_json(const SpreadPathWitness& w);
SpreadPathWitness spread_witness_from_json(const nlohmann::json& j);

// FNV-1a over raw bytes, rendered as 16 hex digits; used for the input
// hashes embedded in certificate bundles.
std::string content_hash(const std::string& bytes);

}  // namespace coarse
