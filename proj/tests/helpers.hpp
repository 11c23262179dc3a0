#ifndef lcllab_tests_helpers_hpp
#define lcllab_tests_helpers_hpp

#include "lcllab/proper.hpp"
#include "lcllab/rng.hpp"

namespace lcllab::testing {

inline LabeledGraph make_path(int n) {
    LabeledGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline LabeledGraph make_cycle(int n) {
    LabeledGraph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// random bipartite instance: black degree exactly 3, white degree in
// [1, max_white_degree]
inline BipartiteInstance random_instance(int whites, int max_white_degree, uint64_t seed) {
    KeyedRng rng(seed, 0xb1);
    std::vector<int> wdeg(whites);
    int total = 0;
    for (int w = 0; w < whites; ++w) {
        wdeg[w] = 1 + static_cast<int>(rng.uniform(max_white_degree));
        total += wdeg[w];
    }
    while (total % 3 != 0) {
        int w = static_cast<int>(rng.uniform(whites));
        if (wdeg[w] < max_white_degree) {
            ++wdeg[w];
            ++total;
        }
    }
    std::vector<int> stubs;
    for (int w = 0; w < whites; ++w)
        for (int i = 0; i < wdeg[w]; ++i) stubs.push_back(w);
    for (size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.uniform(i)]);
    BipartiteInstance b = BipartiteInstance::make(whites, total / 3);
    for (size_t i = 0; i < stubs.size(); ++i)
        b.add_edge(stubs[i], static_cast<int>(i / 3));
    return b;
}

// One random structural mutation: relabel a half-edge, relabel a node,
// delete an edge, or add an edge with arbitrary gadget labels. Node
// relabels are skippable for families whose checkers ignore node labels;
// inserted edges never carry inter links (a duplicate inter link on a
// leaf would still be a proper instance).
inline LabeledGraph mutate(const LabeledGraph& g, uint64_t seed,
                           bool allow_node_relabel = true) {
    KeyedRng rng(seed, 0x3141);
    for (int attempt = 0; attempt < 64; ++attempt) {
        LabeledGraph m = g;
        switch (rng.uniform(4)) {
            case 0: {  // half-edge relabel
                if (m.num_edges() == 0) continue;
                int e = static_cast<int>(rng.uniform(m.num_edges()));
                EdgeLabel l = static_cast<EdgeLabel>(1 + rng.uniform(10));
                if (rng.next_bit()) {
                    if (m.edge(e).lu == l) continue;
                    m.edge(e).lu = l;
                } else {
                    if (m.edge(e).lv == l) continue;
                    m.edge(e).lv = l;
                }
                return m;
            }
            case 1: {  // node relabel
                if (!allow_node_relabel) continue;
                NodeId v = static_cast<NodeId>(rng.uniform(m.num_nodes()));
                NodeLabel l = static_cast<NodeLabel>(1 + rng.uniform(3));  // Head/Port/Inter
                if (m.label(v) == l) continue;
                m.set_label(v, l);
                return m;
            }
            case 2: {  // edge deletion (rebuild without edge e)
                if (m.num_edges() == 0) continue;
                int e = static_cast<int>(rng.uniform(m.num_edges()));
                LabeledGraph d;
                for (NodeId v = 0; v < m.num_nodes(); ++v) {
                    d.add_node(m.label(v));
                    d.input(v) = m.input(v);
                }
                for (int i = 0; i < m.num_edges(); ++i)
                    if (i != e)
                        d.add_edge(m.edge(i).u, m.edge(i).v, m.edge(i).lu, m.edge(i).lv);
                return d;
            }
            default: {  // edge insertion
                NodeId u = static_cast<NodeId>(rng.uniform(m.num_nodes()));
                NodeId v = static_cast<NodeId>(rng.uniform(m.num_nodes()));
                if (u == v) continue;
                m.add_edge(u, v, static_cast<EdgeLabel>(1 + rng.uniform(8)),
                           static_cast<EdgeLabel>(1 + rng.uniform(8)));
                return m;
            }
        }
    }
    return g;
}

} // namespace lcllab::testing

#endif
