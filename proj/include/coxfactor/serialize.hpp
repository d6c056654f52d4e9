#pragma once

#include "coxfactor/diagrams.hpp"
#include "coxfactor/goulden_yong.hpp"
#include "coxfactor/matrix_tree.hpp"
#include "coxfactor/prufer.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace coxfactor {

// Sub-object form {"family", "rank", "images"}; negative images encode sign
// flips.
nlohmann::json to_json(const GroupElement& w);
GroupElement group_element_from_json(const nlohmann::json& j);

// Every document carries "schema": 1 and a "kind" tag naming the type; the
// remaining fields mirror the struct fields. Rooted trees store their parent
// map as [child, parent] pairs sorted by child. Factorizations carry the
// product as a "coxeter" group element plus the derived "one_way" flags.
nlohmann::json to_json(const LabeledTree& t);
nlohmann::json to_json(const RootedLabeledTree& t);
nlohmann::json to_json(const LoopedTree& t);
nlohmann::json to_json(const UnicyclicRootedGraph& g);
nlohmann::json to_json(const DirectedMultigraph& g);
nlohmann::json to_json(const PruferCode& c);
nlohmann::json to_json(const RootSystem& R, const MinimalFactorization& f);
nlohmann::json to_json(const ChordDiagram& d);
nlohmann::json to_json(const FoldedDiagram& d);
nlohmann::json to_json(const DualGraph& g);

// Parsers throw std::invalid_argument on missing fields, wrong kinds, or
// values outside the type invariants.
LabeledTree labeled_tree_from_json(const nlohmann::json& j);
RootedLabeledTree rooted_tree_from_json(const nlohmann::json& j);
LoopedTree looped_tree_from_json(const nlohmann::json& j);
UnicyclicRootedGraph unicyclic_from_json(const nlohmann::json& j);
DirectedMultigraph multigraph_from_json(const nlohmann::json& j);
PruferCode prufer_code_from_json(const nlohmann::json& j);
std::pair<RootSystem, MinimalFactorization> factorization_from_json(
    const nlohmann::json& j);

// Graphviz output; vertices keep their labels, edges carry the factor index
// as label and the color class 1/2 resolved through an edge colorscheme.
std::string to_dot(const DualGraph& g);
std::string to_dot(const FoldedDiagram& d);

// Circle layout with the points equally spaced clockwise from the top; type
// D draws the long cycle on the outer circle and the short one inside.
std::string to_tikz(const ChordDiagram& d);

}  // namespace coxfactor
