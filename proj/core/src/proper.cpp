#include "lcllab/proper.hpp"

#include <algorithm>
#include <map>

namespace lcllab {

using nlohmann::json;

bool BipartiteInstance::operator==(const BipartiteInstance& o) const {
    if (num_whites != o.num_whites || num_blacks != o.num_blacks) return false;
    if (white_edges.size() != o.white_edges.size()) return false;
    for (int w = 0; w < num_whites; ++w) {
        if (white_edges[w].size() != o.white_edges[w].size()) return false;
        for (size_t i = 0; i < white_edges[w].size(); ++i)
            if (edges[white_edges[w][i]].b != o.edges[o.white_edges[w][i]].b) return false;
    }
    return true;
}

json bipartite_to_json(const BipartiteInstance& b) {
    json j;
    j["num_whites"] = b.num_whites;
    j["num_blacks"] = b.num_blacks;
    j["edges"] = json::array();
    // emit in white-port order so the port numbering survives round trips
    for (int w = 0; w < b.num_whites; ++w)
        for (int e : b.white_edges[w])
            j["edges"].push_back({{"w", w}, {"b", b.edges[e].b}});
    return j;
}

BipartiteInstance bipartite_from_json(const json& j) {
    BipartiteInstance b = BipartiteInstance::make(j.at("num_whites").get<int>(),
                                                  j.at("num_blacks").get<int>());
    for (const json& e : j.at("edges"))
        b.add_edge(e.at("w").get<int>(), e.at("b").get<int>());
    return b;
}

bool is_proper_label(EdgeLabel l) {
    return is_octopus_label(l) || l == EdgeLabel::Pi || l == EdgeLabel::Ip;
}

namespace {

bool is_intra_edge(const LabeledGraph& g, int e) {
    const Edge& ed = g.edge(e);
    if (ed.lu == EdgeLabel::Pi || ed.lu == EdgeLabel::Ip || ed.lv == EdgeLabel::Pi ||
        ed.lv == EdgeLabel::Ip)
        return false;
    return g.label(ed.u) != NodeLabel::Inter && g.label(ed.v) != NodeLabel::Inter;
}

} // namespace

ProperContext make_proper_context(const LabeledGraph& g) {
    ProperContext ctx;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        ctx.intra.add_node(g.label(v));
        ctx.intra.input(ctx.intra.num_nodes() - 1) = g.input(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!is_intra_edge(g, e)) continue;
        const Edge& ed = g.edge(e);
        ctx.intra.add_edge(ed.u, ed.v, ed.lu, ed.lv);
    }
    ctx.intra_internal = internal_subgraph(ctx.intra);
    return ctx;
}

std::vector<Violation> check_proper_node(const LabeledGraph& g, const ProperContext& ctx,
                                         NodeId v) {
    std::vector<Violation> out;
    auto bad = [&](const char* rule) { out.push_back({v, rule}); };

    bool inter = g.label(v) == NodeLabel::Inter;
    if (g.label(v) != NodeLabel::Head && g.label(v) != NodeLabel::Port && !inter)
        bad("proper.alphabet");
    for (int e : g.incident(v))
        if (!is_proper_label(g.side(e, v))) {
            bad("proper.alphabet");
            break;
        }

    // 0: away from inter nodes the graph is a disjoint union of octopi
    if (!inter)
        for (const Violation& ov : check_octopus_node(ctx.intra, ctx.intra_internal, v))
            out.push_back(ov);

    // 1: inter links pair up
    for (int e : g.incident(v)) {
        EdgeLabel near = g.side(e, v), far = g.far_side(e, v);
        if (near == EdgeLabel::Pi && far != EdgeLabel::Ip) bad("proper.1");
        if (near == EdgeLabel::Ip && far != EdgeLabel::Pi) bad("proper.1");
    }

    // 2: exactly the left-most port leaves reach out to inter nodes
    bool leftmost_leaf = g.label(v) == NodeLabel::Port && !g.has_half(v, EdgeLabel::ChL) &&
                         !g.has_half(v, EdgeLabel::ChR) && !g.has_half(v, EdgeLabel::L);
    if (g.has_half(v, EdgeLabel::Pi) != leftmost_leaf) bad("proper.2");

    // 3: inter nodes are pendant hubs: nonzero degree, only inter links
    if (inter) {
        if (g.degree(v) < 1) bad("proper.3");
        for (int e : g.incident(v))
            if (g.side(e, v) != EdgeLabel::Ip) {
                bad("proper.3");
                break;
            }
    } else if (g.has_half(v, EdgeLabel::Ip)) {
        bad("proper.3");
    }
    return out;
}

std::vector<Violation> check_proper(const LabeledGraph& g) {
    ProperContext ctx = make_proper_context(g);
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_proper_node(g, ctx, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

Lift lift(const BipartiteInstance& b, int port_height) {
    Lift lifted;
    LabeledGraph& g = lifted.graph;
    std::vector<NodeId> edge_leftmost_leaf(b.edges.size(), kBottom);

    for (int w = 0; w < b.num_whites; ++w) {
        int deg = static_cast<int>(b.white_edges[w].size());
        if (deg < 1) throw std::invalid_argument("white node of degree 0");
        OctopusSpec spec = OctopusSpec::canonical(deg, port_height);
        int base = g.num_nodes();
        LabeledGraph octo = build_octopus(spec);
        for (NodeId v = 0; v < octo.num_nodes(); ++v) {
            g.add_node(octo.label(v));
            lifted.comp.push_back({CompRef::White, w});
        }
        for (int e = 0; e < octo.num_edges(); ++e) {
            const Edge& ed = octo.edge(e);
            g.add_edge(base + ed.u, base + ed.v, ed.lu, ed.lv);
        }
        // the t-th edge of w is the t-th port in (leaf, link) order; its
        // nodes stand for that edge
        int head_size = (1 << spec.x) - 1;
        int offset = head_size;
        int t = 0;
        for (size_t i = 0; i < spec.eta.size(); ++i) {
            for (int j = 0; j < spec.eta[i]; ++j) {
                int port_size = (1 << spec.heights[i][j]) - 1;
                int edge_id = b.white_edges[w][t];
                for (int v = 0; v < port_size; ++v)
                    lifted.comp[base + offset + v] = {CompRef::EdgePort, edge_id};
                edge_leftmost_leaf[edge_id] =
                    base + offset + (1 << (spec.heights[i][j] - 1)) - 1;
                offset += port_size;
                ++t;
            }
        }
    }
    for (int bl = 0; bl < b.num_blacks; ++bl) {
        NodeId inter = g.add_node(NodeLabel::Inter);
        lifted.comp.push_back({CompRef::Black, bl});
        for (int e : b.black_edges[bl])
            g.add_edge(edge_leftmost_leaf[e], inter, EdgeLabel::Pi, EdgeLabel::Ip);
    }
    return lifted;
}

std::optional<Compressed> compress(const LabeledGraph& g) {
    if (!check_proper(g).empty()) return std::nullopt;
    LabeledGraph internal = internal_subgraph(make_proper_context(g).intra);

    // gadgets are the components of the internal subgraph (inter nodes are
    // isolated there and skipped)
    std::vector<std::vector<NodeId>> comps = components(internal);
    std::vector<int> gadget_of(g.num_nodes(), -1);
    std::vector<std::optional<TreeShape>> shapes(comps.size());
    std::vector<bool> is_head(comps.size(), false);
    for (size_t c = 0; c < comps.size(); ++c) {
        if (g.label(comps[c][0]) == NodeLabel::Inter) continue;
        for (NodeId v : comps[c]) gadget_of[v] = static_cast<int>(c);
        shapes[c] = recover_tree(internal, comps[c]);
        if (!shapes[c]) return std::nullopt;
        is_head[c] = g.label(comps[c][0]) == NodeLabel::Head;
    }

    // whites = head gadgets in min-node-id order; blacks = inter nodes in id order
    std::vector<int> head_comps;
    for (size_t c = 0; c < comps.size(); ++c)
        if (shapes[c] && is_head[c]) head_comps.push_back(static_cast<int>(c));
    std::vector<NodeId> inter_nodes;
    std::vector<int> black_of(g.num_nodes(), -1);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.label(v) == NodeLabel::Inter) {
            black_of[v] = static_cast<int>(inter_nodes.size());
            inter_nodes.push_back(v);
        }

    Compressed result;
    result.instance = BipartiteInstance::make(static_cast<int>(head_comps.size()),
                                              static_cast<int>(inter_nodes.size()));
    result.comp.assign(g.num_nodes(), CompRef{});
    for (size_t wi = 0; wi < head_comps.size(); ++wi)
        for (NodeId v : comps[head_comps[wi]])
            result.comp[v] = {CompRef::White, static_cast<int>(wi)};
    for (NodeId v : inter_nodes) result.comp[v] = {CompRef::Black, black_of[v]};

    for (size_t wi = 0; wi < head_comps.size(); ++wi) {
        const TreeShape& head = *shapes[head_comps[wi]];
        result.head_heights.push_back(head.height);
        for (NodeId leaf : head.layers.back()) {
            for (EdgeLabel link : {EdgeLabel::Hp1, EdgeLabel::Hp2}) {
                int he = g.unique_half(leaf, link);
                if (he == -1) continue;
                NodeId port_root = g.other(he, leaf);
                int pc = gadget_of[port_root];
                if (pc < 0 || !shapes[pc] || is_head[pc]) return std::nullopt;
                const TreeShape& port = *shapes[pc];
                NodeId leftmost = port.layers.back().front();
                int pe = g.unique_half(leftmost, EdgeLabel::Pi);
                if (pe < 0) return std::nullopt;  // need exactly one inter link
                NodeId inter = g.other(pe, leftmost);
                int edge_id = result.instance.add_edge(static_cast<int>(wi), black_of[inter]);
                result.port_heights.push_back(port.height);
                for (NodeId v : comps[pc]) result.comp[v] = {CompRef::EdgePort, edge_id};
            }
        }
    }
    return result;
}

} // namespace lcllab
