#include "lcllab/tree_gadget.hpp"

#include <algorithm>

namespace lcllab {

LabeledGraph build_tree_gadget(int height) {
    if (height < 1) throw std::invalid_argument("gadget height must be >= 1");
    LabeledGraph g((1 << height) - 1);
    auto id = [](int l, int k) { return (1 << l) - 1 + k; };
    for (int l = 0; l < height; ++l) {
        for (int k = 0; k < (1 << l); ++k) {
            if (l + 1 < height) {
                g.add_edge(id(l + 1, 2 * k), id(l, k), EdgeLabel::P, EdgeLabel::ChL);
                g.add_edge(id(l + 1, 2 * k + 1), id(l, k), EdgeLabel::P, EdgeLabel::ChR);
            }
            if (k + 1 < (1 << l))
                g.add_edge(id(l, k), id(l, k + 1), EdgeLabel::R, EdgeLabel::L);
        }
    }
    return g;
}

bool is_tree_label(EdgeLabel l) {
    switch (l) {
        case EdgeLabel::L:
        case EdgeLabel::R:
        case EdgeLabel::P:
        case EdgeLabel::ChL:
        case EdgeLabel::ChR:
            return true;
        default:
            return false;
    }
}

std::vector<Violation> check_tree_node(const LabeledGraph& g, NodeId v) {
    std::vector<Violation> out;
    auto bad = [&](const char* rule) { out.push_back({v, rule}); };

    for (int e : g.incident(v))
        if (!is_tree_label(g.side(e, v))) {
            bad("tree.alphabet");
            break;
        }

    // 1: incident half-edge labels are pairwise distinct
    for (EdgeLabel l : {EdgeLabel::L, EdgeLabel::R, EdgeLabel::P, EdgeLabel::ChL,
                        EdgeLabel::ChR})
        if (g.count_half(v, l) > 1) {
            bad("tree.1");
            break;
        }

    // 2, 3: L pairs with R; P pairs with a child label and vice versa
    for (int e : g.incident(v)) {
        EdgeLabel near = g.side(e, v), far = g.far_side(e, v);
        if ((near == EdgeLabel::L && far != EdgeLabel::R) ||
            (near == EdgeLabel::R && far != EdgeLabel::L))
            bad("tree.2");
        if ((near == EdgeLabel::P && far != EdgeLabel::ChL && far != EdgeLabel::ChR) ||
            ((near == EdgeLabel::ChL || near == EdgeLabel::ChR) && far != EdgeLabel::P))
            bad("tree.3");
    }

    // 4, 5: left children close a square with the right sibling; right
    // children with a right neighbor close a square through the parent's
    // right neighbor
    for (int e : g.incident(v)) {
        if (g.side(e, v) != EdgeLabel::P) continue;
        EdgeLabel far = g.far_side(e, v);
        if (far == EdgeLabel::ChL &&
            follow_path(g, v, {EdgeLabel::P, EdgeLabel::ChR, EdgeLabel::L}) != v)
            bad("tree.4");
        if (far == EdgeLabel::ChR && g.has_half(v, EdgeLabel::R) &&
            follow_path(g, v, {EdgeLabel::P, EdgeLabel::R, EdgeLabel::ChL, EdgeLabel::L}) != v)
            bad("tree.5");
    }

    // 6: both children or none
    if (g.has_half(v, EdgeLabel::ChL) != g.has_half(v, EdgeLabel::ChR)) bad("tree.6");

    // 7: exactly the root lacks same-layer neighbors
    if (!g.has_half(v, EdgeLabel::P) !=
        (!g.has_half(v, EdgeLabel::L) && !g.has_half(v, EdgeLabel::R)))
        bad("tree.7");

    // 8: childlessness propagates along the layer
    if (!g.has_half(v, EdgeLabel::ChL) && !g.has_half(v, EdgeLabel::ChR)) {
        for (EdgeLabel l : {EdgeLabel::L, EdgeLabel::R}) {
            if (!g.has_half(v, l)) continue;
            NodeId t = follow_path(g, v, {l});
            if (t == kBottom || g.has_half(t, EdgeLabel::ChL) || g.has_half(t, EdgeLabel::ChR))
                bad("tree.8");
        }
    }

    // 9: being layer-leftmost/rightmost is inherited from the parent
    for (int e : g.incident(v)) {
        if (g.side(e, v) != EdgeLabel::P) continue;
        NodeId parent = g.other(e, v);
        EdgeLabel far = g.far_side(e, v);
        if (far == EdgeLabel::ChL &&
            g.has_half(v, EdgeLabel::L) != g.has_half(parent, EdgeLabel::L))
            bad("tree.9");
        if (far == EdgeLabel::ChR &&
            g.has_half(v, EdgeLabel::R) != g.has_half(parent, EdgeLabel::R))
            bad("tree.9");
    }
    return out;
}

std::vector<Violation> check_tree(const LabeledGraph& g) {
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_tree_node(g, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

std::optional<TreeShape> recover_tree(const LabeledGraph& g, const std::vector<NodeId>& comp) {
    // locate the unique root (no parent half-edge)
    NodeId root = kBottom;
    for (NodeId v : comp) {
        if (!g.has_half(v, EdgeLabel::P)) {
            if (root != kBottom) return std::nullopt;
            root = v;
        }
    }
    if (root == kBottom) return std::nullopt;

    TreeShape shape;
    shape.layers.push_back({root});
    size_t covered = 1;
    while (true) {
        const std::vector<NodeId>& layer = shape.layers.back();
        bool leaves = !g.has_half(layer[0], EdgeLabel::ChL);
        std::vector<NodeId> next;
        for (size_t k = 0; k < layer.size(); ++k) {
            NodeId v = layer[k];
            // horizontal path must match the coordinate order
            if ((k == 0) != !g.has_half(v, EdgeLabel::L)) return std::nullopt;
            if ((k + 1 == layer.size()) != !g.has_half(v, EdgeLabel::R)) return std::nullopt;
            if (k + 1 < layer.size() &&
                follow_path(g, v, {EdgeLabel::R}) != layer[k + 1])
                return std::nullopt;
            if (leaves) {
                if (g.has_half(v, EdgeLabel::ChL) || g.has_half(v, EdgeLabel::ChR))
                    return std::nullopt;
                continue;
            }
            NodeId cl = follow_path(g, v, {EdgeLabel::ChL});
            NodeId cr = follow_path(g, v, {EdgeLabel::ChR});
            if (cl == kBottom || cr == kBottom) return std::nullopt;
            next.push_back(cl);
            next.push_back(cr);
        }
        if (leaves) break;
        covered += next.size();
        shape.layers.push_back(std::move(next));
        if (shape.layers.size() > comp.size()) return std::nullopt;
    }
    if (covered != comp.size()) return std::nullopt;
    shape.height = static_cast<int>(shape.layers.size());
    return shape;
}

} // namespace lcllab
