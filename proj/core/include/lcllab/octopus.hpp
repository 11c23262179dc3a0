#ifndef lcllab_octopus_hpp
#define lcllab_octopus_hpp

#include <vector>

#include "lcllab/tree_gadget.hpp"

namespace lcllab {

/*
 * Octopus gadget: a head (tree-like gadget of height x, nodes labeled Head)
 * whose i-th bottom-layer leaf carries eta[i] in {1,2} port gadgets
 * (tree-like gadgets of the given heights, nodes labeled Port). The j-th
 * port of a leaf hangs off an edge labeled hp_link_j on the head side and
 * ph_link on the port-root side.
 */
struct OctopusSpec {
    int x = 1;
    std::vector<int> eta;                    // 2^(x-1) entries in {1,2}
    std::vector<std::vector<int>> heights;   // heights[i].size() == eta[i]

    // canonical spec used by the lift: deg ports, first entries doubled
    static OctopusSpec canonical(int degree, int port_height);
    int num_ports() const;
    int num_nodes() const;
};

// Node layout: head gadget first (tree-gadget ids), then port gadgets in
// (leaf, link) lexicographic order, each block in tree-gadget id order.
LabeledGraph build_octopus(const OctopusSpec& spec);

bool is_octopus_label(EdgeLabel l);

// an edge is internal when neither half-edge is a head/port link
bool is_internal_edge(const LabeledGraph& g, int e);

// same node ids, internal edges only
LabeledGraph internal_subgraph(const LabeledGraph& g);

// Octopus constraints at one node; `internal` must be internal_subgraph(g).
// Rules "octopus.1" .. "octopus.8", "octopus.alphabet", plus forwarded
// "tree.*" rules from the internal subgraph.
std::vector<Violation> check_octopus_node(const LabeledGraph& g, const LabeledGraph& internal,
                                          NodeId v);
std::vector<Violation> check_octopus(const LabeledGraph& g);

} // namespace lcllab

#endif
