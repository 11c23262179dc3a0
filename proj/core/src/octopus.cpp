#include "lcllab/octopus.hpp"

#include <numeric>
#include <stdexcept>

namespace lcllab {

OctopusSpec OctopusSpec::canonical(int degree, int port_height) {
    if (degree < 1) throw std::invalid_argument("octopus degree must be >= 1");
    OctopusSpec spec;
    spec.x = 1;
    while ((1 << spec.x) - 1 < degree) ++spec.x;  // x = floor(log2(degree)) + 1
    int leaves = 1 << (spec.x - 1);
    int doubled = degree - leaves;
    for (int i = 0; i < leaves; ++i) {
        spec.eta.push_back(i < doubled ? 2 : 1);
        spec.heights.emplace_back(spec.eta.back(), port_height);
    }
    return spec;
}

int OctopusSpec::num_ports() const {
    return std::accumulate(eta.begin(), eta.end(), 0);
}

int OctopusSpec::num_nodes() const {
    int n = (1 << x) - 1;
    for (const std::vector<int>& hs : heights)
        for (int h : hs) n += (1 << h) - 1;
    return n;
}

LabeledGraph build_octopus(const OctopusSpec& spec) {
    if (spec.x < 1 || spec.eta.size() != static_cast<size_t>(1 << (spec.x - 1)) ||
        spec.heights.size() != spec.eta.size())
        throw std::invalid_argument("malformed octopus spec");
    LabeledGraph g = build_tree_gadget(spec.x);
    for (NodeId v = 0; v < g.num_nodes(); ++v) g.set_label(v, NodeLabel::Head);

    auto head_leaf = [&](int i) { return (1 << (spec.x - 1)) - 1 + i; };
    for (size_t i = 0; i < spec.eta.size(); ++i) {
        if (spec.eta[i] < 1 || spec.eta[i] > 2 ||
            spec.heights[i].size() != static_cast<size_t>(spec.eta[i]))
            throw std::invalid_argument("malformed octopus spec");
        for (int j = 1; j <= spec.eta[i]; ++j) {
            LabeledGraph port = build_tree_gadget(spec.heights[i][j - 1]);
            int base = g.num_nodes();
            for (NodeId v = 0; v < port.num_nodes(); ++v) g.add_node(NodeLabel::Port);
            for (int e = 0; e < port.num_edges(); ++e) {
                const Edge& ed = port.edge(e);
                g.add_edge(base + ed.u, base + ed.v, ed.lu, ed.lv);
            }
            g.add_edge(head_leaf(static_cast<int>(i)), base,
                       j == 1 ? EdgeLabel::Hp1 : EdgeLabel::Hp2, EdgeLabel::Ph);
        }
    }
    return g;
}

bool is_octopus_label(EdgeLabel l) {
    return is_tree_label(l) || l == EdgeLabel::Hp1 || l == EdgeLabel::Hp2 ||
           l == EdgeLabel::Ph;
}

bool is_internal_edge(const LabeledGraph& g, int e) {
    for (EdgeLabel l : {g.edge(e).lu, g.edge(e).lv})
        if (l == EdgeLabel::Hp1 || l == EdgeLabel::Hp2 || l == EdgeLabel::Ph) return false;
    return true;
}

LabeledGraph internal_subgraph(const LabeledGraph& g) {
    LabeledGraph sub;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        NodeId w = sub.add_node(g.label(v));
        sub.input(w) = g.input(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!is_internal_edge(g, e)) continue;
        const Edge& ed = g.edge(e);
        sub.add_edge(ed.u, ed.v, ed.lu, ed.lv);
    }
    return sub;
}

std::vector<Violation> check_octopus_node(const LabeledGraph& g, const LabeledGraph& internal,
                                          NodeId v) {
    std::vector<Violation> out;
    auto bad = [&](const char* rule) { out.push_back({v, rule}); };

    bool head = g.label(v) == NodeLabel::Head;
    bool port = g.label(v) == NodeLabel::Port;
    if (!head && !port) bad("octopus.alphabet");
    for (int e : g.incident(v))
        if (!is_octopus_label(g.side(e, v))) {
            bad("octopus.alphabet");
            break;
        }

    // 0: internal edges look like a tree gadget
    for (const Violation& tv : check_tree_node(internal, v)) out.push_back(tv);

    // 1: an edge stays inside a gadget iff its endpoints agree on head/port
    for (int e : g.incident(v))
        if (is_internal_edge(g, e) != (g.label(v) == g.label(g.other(e, v)))) {
            bad("octopus.1");
            break;
        }

    // 2: head/port links pair up; a malformed link blames both endpoints so
    // the error originates inside every gadget it touches
    for (int e : g.incident(v)) {
        EdgeLabel near = g.side(e, v), far = g.far_side(e, v);
        bool near_hp = near == EdgeLabel::Hp1 || near == EdgeLabel::Hp2;
        bool far_hp = far == EdgeLabel::Hp1 || far == EdgeLabel::Hp2;
        if (near_hp != (far == EdgeLabel::Ph) || far_hp != (near == EdgeLabel::Ph))
            bad("octopus.2");
    }

    // 3, 4: link directions respect the node labels
    if (head && g.has_half(v, EdgeLabel::Ph)) bad("octopus.3");
    if (port && (g.has_half(v, EdgeLabel::Hp1) || g.has_half(v, EdgeLabel::Hp2)))
        bad("octopus.4");

    // 5: exactly the childless head nodes carry ports
    bool has_hp = g.has_half(v, EdgeLabel::Hp1) || g.has_half(v, EdgeLabel::Hp2);
    bool childless = !g.has_half(v, EdgeLabel::ChL) && !g.has_half(v, EdgeLabel::ChR);
    if (has_hp != (head && childless)) bad("octopus.5");

    // 6: exactly the port roots attach to a head
    if (g.has_half(v, EdgeLabel::Ph) != (port && !g.has_half(v, EdgeLabel::P)))
        bad("octopus.6");

    // 7: at most one of each link kind
    if (g.count_half(v, EdgeLabel::Ph) > 1 || g.count_half(v, EdgeLabel::Hp1) > 1 ||
        g.count_half(v, EdgeLabel::Hp2) > 1)
        bad("octopus.7");

    // 8: a second port implies a first
    if (g.has_half(v, EdgeLabel::Hp2) && !g.has_half(v, EdgeLabel::Hp1)) bad("octopus.8");

    return out;
}

std::vector<Violation> check_octopus(const LabeledGraph& g) {
    LabeledGraph internal = internal_subgraph(g);
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_octopus_node(g, internal, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

} // namespace lcllab
