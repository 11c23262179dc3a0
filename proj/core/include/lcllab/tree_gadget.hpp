#ifndef lcllab_tree_gadget_hpp
#define lcllab_tree_gadget_hpp

#include <optional>
#include <vector>

#include "lcllab/lcl.hpp"

namespace lcllab {

/*
 * Tree-like gadget of height h: a perfect binary tree whose layers are
 * additionally joined into left-to-right paths. Node (l,k) has id 2^l-1+k.
 * Half-edge labels: P towards the parent, ChL/ChR towards the children,
 * L/R towards the same-layer neighbors.
 */
LabeledGraph build_tree_gadget(int height);

bool is_tree_label(EdgeLabel l);

// Local structural constraints of the gadget at one node. Rules are named
// "tree.1" .. "tree.9" plus "tree.alphabet" for foreign half-edge labels.
std::vector<Violation> check_tree_node(const LabeledGraph& g, NodeId v);
std::vector<Violation> check_tree(const LabeledGraph& g);

// Layer-by-layer structure of a valid gadget component: layers[l][k] is the
// node at coordinate (l,k). Returns nullopt when the component is not a
// fully-formed gadget.
struct TreeShape {
    int height = 0;
    std::vector<std::vector<NodeId>> layers;
};
std::optional<TreeShape> recover_tree(const LabeledGraph& g, const std::vector<NodeId>& comp);

} // namespace lcllab

#endif
