#ifndef lcllab_graph_hpp
#define lcllab_graph_hpp

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcllab {

using NodeId = int;

// "no such node": result of an ambiguous or missing label-path
constexpr NodeId kBottom = -1;

enum class NodeLabel : uint8_t {
    None,
    Head,
    Port,
    Inter,
    White,
    Black,
};

enum class EdgeLabel : uint8_t {
    None,
    L,    // left same-layer neighbor
    R,    // right same-layer neighbor
    P,    // parent
    ChL,  // left child
    ChR,  // right child
    Hp1,  // head -> port link 1
    Hp2,  // head -> port link 2
    Ph,   // port -> head link
    Pi,   // port -> inter link
    Ip,   // inter -> port link
};

const char* to_string(NodeLabel l);
const char* to_string(EdgeLabel l);
NodeLabel node_label_from_string(const std::string& s);
EdgeLabel edge_label_from_string(const std::string& s);

// per-node input record (identifier, mark bit, optional seed material)
struct NodeInput {
    uint64_t ident = 0;
    bool mark = false;
};

struct Edge {
    NodeId u, v;
    EdgeLabel lu, lv;
};

/*
 * An undirected multigraph with half-edge labels. Nodes are dense 0..n-1;
 * parallel edges are allowed and addressed by edge index. Incidence lists
 * keep insertion order, which doubles as the port order of a node.
 */
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n) { for (int i = 0; i < n; ++i) add_node(); }

    NodeId add_node(NodeLabel label = NodeLabel::None) {
        labels_.push_back(label);
        inputs_.push_back(NodeInput{static_cast<uint64_t>(labels_.size() - 1), false});
        incident_.emplace_back();
        return static_cast<NodeId>(labels_.size() - 1);
    }

    int add_edge(NodeId u, NodeId v, EdgeLabel lu = EdgeLabel::None,
                 EdgeLabel lv = EdgeLabel::None) {
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{u, v, lu, lv});
        incident_[u].push_back(e);
        if (v != u) incident_[v].push_back(e);
        return e;
    }

    int num_nodes() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    NodeLabel label(NodeId v) const { return labels_[v]; }
    void set_label(NodeId v, NodeLabel l) { labels_[v] = l; }

    NodeInput& input(NodeId v) { return inputs_[v]; }
    const NodeInput& input(NodeId v) const { return inputs_[v]; }

    Edge& edge(int e) { return edges_[e]; }
    const Edge& edge(int e) const { return edges_[e]; }

    const std::vector<int>& incident(NodeId v) const { return incident_[v]; }
    int degree(NodeId v) const { return static_cast<int>(incident_[v].size()); }

    NodeId other(int e, NodeId v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    // label of the half-edge of e at node v
    EdgeLabel side(int e, NodeId v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.lu : ed.lv;
    }

    // label of the half-edge of e at the far endpoint
    EdgeLabel far_side(int e, NodeId v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.lv : ed.lu;
    }

    void set_side(int e, NodeId v, EdgeLabel l) {
        Edge& ed = edges_[e];
        (ed.u == v ? ed.lu : ed.lv) = l;
    }

    bool has_half(NodeId v, EdgeLabel l) const { return count_half(v, l) > 0; }

    int count_half(NodeId v, EdgeLabel l) const {
        int c = 0;
        for (int e : incident_[v])
            if (side(e, v) == l) ++c;
        return c;
    }

    // unique incident edge carrying half-label l at v; -1 none, -2 ambiguous
    int unique_half(NodeId v, EdgeLabel l) const {
        int found = -1;
        for (int e : incident_[v]) {
            if (side(e, v) != l) continue;
            if (found != -1) return -2;
            found = e;
        }
        return found;
    }

    int max_degree() const {
        int d = 0;
        for (NodeId v = 0; v < num_nodes(); ++v) d = std::max(d, degree(v));
        return d;
    }

private:
    std::vector<NodeLabel> labels_;
    std::vector<NodeInput> inputs_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// The unique endpoint of the walk from v whose i-th step leaves through a
// half-edge labeled seq[i]; kBottom when no such walk exists or several do.
NodeId follow_path(const LabeledGraph& g, NodeId v, std::span<const EdgeLabel> seq);
NodeId follow_path(const LabeledGraph& g, NodeId v, std::initializer_list<EdgeLabel> seq);

// BFS distances from sources; -1 for unreachable nodes
std::vector<int> bfs_dist(const LabeledGraph& g, std::span<const NodeId> sources);
std::vector<int> bfs_dist(const LabeledGraph& g, NodeId source);
int distance(const LabeledGraph& g, NodeId u, NodeId v);

std::vector<std::vector<NodeId>> components(const LabeledGraph& g);

// lower-bound estimate of a component's diameter via double BFS, plus the two
// extremes realizing it (used for honest per-node radius accounting)
struct DiameterEstimate {
    int diameter = 0;
    NodeId a = kBottom, b = kBottom;
};
DiameterEstimate estimate_diameter(const LabeledGraph& g, NodeId inside);

/*
 * The radius-t view of a center set: the open induced subgraph on N_t(S)
 * (edges between two frontier nodes are dropped) together with the input
 * restriction. Node ids are remapped to 0..k-1; to_orig maps back.
 */
struct View {
    LabeledGraph graph;
    std::vector<NodeId> to_orig;
    std::unordered_map<NodeId, NodeId> to_local;
    std::vector<int> depth;  // BFS depth of each local node from the centers
    int radius = 0;
};

View make_view(const LabeledGraph& g, std::span<const NodeId> centers, int t);
View make_view(const LabeledGraph& g, NodeId center, int t);

// k-th power: same nodes, one unlabeled edge per pair at distance in [1, k]
LabeledGraph power_graph(const LabeledGraph& g, int k);

// induced subgraph on `keep` (all edges with both endpoints kept)
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const NodeId> keep,
                              std::vector<NodeId>* to_orig = nullptr);

// assign distinct identifiers from [0, n^c) uniformly at random
void assign_idents(LabeledGraph& g, uint64_t seed, int c = 2);

} // namespace lcllab

#endif
