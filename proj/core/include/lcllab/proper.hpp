#ifndef lcllab_proper_hpp
#define lcllab_proper_hpp

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcllab/octopus.hpp"

namespace lcllab {

/*
 * Bipartite multigraph between white and black nodes. Parallel edges are
 * allowed; the position of an edge in a white node's list is the white's
 * port numbering for that edge.
 */
struct BipartiteInstance {
    struct BEdge {
        int w, b;
    };
    int num_whites = 0;
    int num_blacks = 0;
    std::vector<BEdge> edges;
    std::vector<std::vector<int>> white_edges;  // ordered edge ids per white
    std::vector<std::vector<int>> black_edges;

    int add_edge(int w, int b) {
        edges.push_back({w, b});
        white_edges[w].push_back(static_cast<int>(edges.size()) - 1);
        black_edges[b].push_back(static_cast<int>(edges.size()) - 1);
        return static_cast<int>(edges.size()) - 1;
    }

    static BipartiteInstance make(int whites, int blacks) {
        BipartiteInstance b;
        b.num_whites = whites;
        b.num_blacks = blacks;
        b.white_edges.resize(whites);
        b.black_edges.resize(blacks);
        return b;
    }

    // equality up to edge renumbering (white lists compared positionally)
    bool operator==(const BipartiteInstance& o) const;
};

nlohmann::json bipartite_to_json(const BipartiteInstance& b);
BipartiteInstance bipartite_from_json(const nlohmann::json& j);

bool is_proper_label(EdgeLabel l);

// precomputed views used by the proper-instance constraints; both graphs
// share node ids with the original
struct ProperContext {
    LabeledGraph intra;           // intra-octopus edges between non-inter nodes
    LabeledGraph intra_internal;  // internal edges of the above
};
ProperContext make_proper_context(const LabeledGraph& g);

// Rules "proper.1" .. "proper.3", "proper.alphabet", plus forwarded
// "octopus.*" / "tree.*" rules evaluated on the intra-octopus subgraph.
std::vector<Violation> check_proper_node(const LabeledGraph& g, const ProperContext& ctx,
                                         NodeId v);
std::vector<Violation> check_proper(const LabeledGraph& g);

// what a node of a lift stands for in the bipartite instance
struct CompRef {
    enum Kind : uint8_t { White, EdgePort, Black };
    Kind kind = White;
    int index = 0;
    bool operator==(const CompRef&) const = default;
};

struct Lift {
    LabeledGraph graph;
    std::vector<CompRef> comp;  // per node of `graph`
};

/*
 * Edge-order preserving lift: white w becomes an octopus with
 * x_w = floor(log2 deg(w)) + 1 and canonical port multiplicities; the i-th
 * edge of w becomes the i-th port gadget (all of height port_height); black
 * b becomes an inter node joined to the left-most leaf of each port gadget
 * of its edges.
 */
Lift lift(const BipartiteInstance& b, int port_height);

struct Compressed {
    BipartiteInstance instance;
    std::vector<CompRef> comp;        // per node of the input graph
    std::vector<int> port_heights;    // per edge of the instance
    std::vector<int> head_heights;    // per white
};

// Inverse of the lift on proper instances whose left-most port leaves carry
// exactly one inter link each. Returns nullopt when the graph is not such a
// proper instance.
std::optional<Compressed> compress(const LabeledGraph& g);

} // namespace lcllab

#endif
