#ifndef lcllab_graph_io_hpp
#define lcllab_graph_io_hpp

#include <string>

#include <nlohmann/json.hpp>

#include "lcllab/graph.hpp"

namespace lcllab {

/*
 * JSON instance format:
 *   { "n": 3,
 *     "nodes": [ {"id": 0, "label": "head", "input": {"ident": 7, "mark": 0}}, ... ],
 *     "edges": [ {"u": 0, "v": 1, "lu": "P", "lv": "ChL"}, ... ] }
 * Node entries may omit "label"/"input"; edges may omit "lu"/"lv".
 */
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

LabeledGraph load_graph(const std::string& path);
void save_graph(const LabeledGraph& g, const std::string& path);

// Graphviz export; half-edge labels appear as tail/head labels
std::string graph_to_dot(const LabeledGraph& g);

} // namespace lcllab

#endif
