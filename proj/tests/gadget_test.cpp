#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "lcllab/proper.hpp"

using namespace lcllab;
using namespace lcllab::testing;

TEST_CASE("canonical tree gadgets are clean and recoverable") {
    for (int h = 1; h <= 5; ++h) {
        LabeledGraph g = build_tree_gadget(h);
        CHECK(g.num_nodes() == (1 << h) - 1);
        // 2^h - 2 vertical edges plus sum_l (2^l - 1) horizontal ones
        CHECK(g.num_edges() == ((1 << h) - 2) + ((1 << h) - 1 - h));
        CHECK(check_tree(g).empty());

        std::vector<std::vector<NodeId>> comps = components(g);
        REQUIRE(comps.size() == 1);
        std::optional<TreeShape> shape = recover_tree(g, comps[0]);
        REQUIRE(shape);
        CHECK(shape->height == h);
        for (int l = 0; l < h; ++l) {
            REQUIRE(shape->layers[l].size() == static_cast<size_t>(1 << l));
            for (int k = 0; k < (1 << l); ++k) CHECK(shape->layers[l][k] == (1 << l) - 1 + k);
        }
    }
    CHECK_THROWS(build_tree_gadget(0));
}

TEST_CASE("targeted tree breaks are caught") {
    LabeledGraph g = build_tree_gadget(3);

    SUBCASE("child half relabeled") {
        for (int e = 0; e < g.num_edges(); ++e)
            if (g.edge(e).lv == EdgeLabel::ChL) {
                g.edge(e).lv = EdgeLabel::ChR;
                break;
            }
        CHECK(!check_tree(g).empty());
    }
    SUBCASE("horizontal edge deleted") {
        LabeledGraph d;
        for (NodeId v = 0; v < g.num_nodes(); ++v) d.add_node();
        for (int e = 0; e < g.num_edges(); ++e)
            if (g.side(e, g.edge(e).u) != EdgeLabel::R || g.edge(e).u != 3)
                d.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).lu, g.edge(e).lv);
        CHECK(d.num_edges() == g.num_edges() - 1);
        CHECK(!check_tree(d).empty());
    }
    SUBCASE("layer wrapped into a cycle") {
        g.add_edge(6, 3, EdgeLabel::R, EdgeLabel::L);
        CHECK(!check_tree(g).empty());
    }
    SUBCASE("recover_tree rejects a broken component") {
        g.edge(0).lu = EdgeLabel::ChR;
        CHECK(!recover_tree(g, components(g)[0]));
    }
}

TEST_CASE("random tree mutations always violate") {
    for (int h = 2; h <= 4; ++h) {
        LabeledGraph base = build_tree_gadget(h);
        for (uint64_t s = 0; s < 150; ++s) {
            LabeledGraph m = mutate(base, s * 11 + h, false);
            CHECK(!check_tree(m).empty());
        }
    }
}

TEST_CASE("canonical octopus specs") {
    for (int deg = 1; deg <= 9; ++deg) {
        OctopusSpec spec = OctopusSpec::canonical(deg, 2);
        CHECK(spec.num_ports() == deg);
        CHECK((1 << spec.x) - 1 >= deg);
        CHECK((1 << (spec.x - 1)) - 1 < deg);
        LabeledGraph g = build_octopus(spec);
        CHECK(g.num_nodes() == spec.num_nodes());
        CHECK(check_octopus(g).empty());
    }
    CHECK_THROWS(OctopusSpec::canonical(0, 2));
    CHECK_THROWS(build_octopus(OctopusSpec{2, {1}, {{1}}}));  // wrong eta arity
    CHECK_THROWS(build_octopus(OctopusSpec{1, {3}, {{1, 1, 1}}}));  // eta out of range
}

TEST_CASE("internal subgraph strips link edges only") {
    LabeledGraph g = build_octopus(OctopusSpec::canonical(3, 2));
    LabeledGraph internal = internal_subgraph(g);
    CHECK(internal.num_nodes() == g.num_nodes());
    int links = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!is_internal_edge(g, e)) ++links;
    CHECK(links == 3);  // one per port
    CHECK(internal.num_edges() == g.num_edges() - links);
}

TEST_CASE("random octopus mutations always violate") {
    std::vector<OctopusSpec> specs = {OctopusSpec::canonical(1, 2),
                                      OctopusSpec::canonical(4, 2),
                                      OctopusSpec::canonical(7, 1)};
    for (size_t i = 0; i < specs.size(); ++i) {
        LabeledGraph base = build_octopus(specs[i]);
        for (uint64_t s = 0; s < 150; ++s) {
            LabeledGraph m = mutate(base, s * 13 + i, true);
            CHECK(!check_octopus(m).empty());
        }
    }
}

TEST_CASE("bipartite json round trip") {
    BipartiteInstance b = random_instance(7, 5, 3);
    BipartiteInstance back = bipartite_from_json(bipartite_to_json(b));
    CHECK(back == b);
    CHECK(back.num_whites == b.num_whites);
    CHECK(back.num_blacks == b.num_blacks);
}

TEST_CASE("lift produces proper instances and compress inverts it") {
    for (uint64_t s = 0; s < 20; ++s) {
        BipartiteInstance b = random_instance(3 + static_cast<int>(s % 8), 6, s);
        for (int h : {1, 2, 3}) {
            Lift lifted = lift(b, h);
            CHECK(check_proper(lifted.graph).empty());
            std::optional<Compressed> back = compress(lifted.graph);
            REQUIRE(back);
            CHECK(back->instance == b);
            for (int heights : back->port_heights) CHECK(heights == h);
        }
    }
}

TEST_CASE("lift bookkeeping matches the instance") {
    BipartiteInstance b = random_instance(5, 4, 9);
    Lift lifted = lift(b, 2);
    int whites = 0, blacks = 0, ports = 0;
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v) {
        switch (lifted.comp[v].kind) {
            case CompRef::White: ++whites; break;
            case CompRef::Black: ++blacks; break;
            case CompRef::EdgePort: ++ports; break;
        }
    }
    CHECK(blacks == b.num_blacks);
    CHECK(ports == static_cast<int>(b.edges.size()) * 3);  // height-2 port gadgets
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
        if (lifted.graph.label(v) == NodeLabel::Inter)
            CHECK(lifted.comp[v].kind == CompRef::Black);
}

TEST_CASE("compress rejects non-lift graphs") {
    BipartiteInstance b = random_instance(4, 4, 1);
    Lift lifted = lift(b, 2);

    SUBCASE("missing inter link") {
        LabeledGraph d;
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v) {
            d.add_node(lifted.graph.label(v));
            d.input(v) = lifted.graph.input(v);
        }
        bool dropped = false;
        for (int e = 0; e < lifted.graph.num_edges(); ++e) {
            const Edge& ed = lifted.graph.edge(e);
            if (!dropped && (ed.lu == EdgeLabel::Pi || ed.lv == EdgeLabel::Pi)) {
                dropped = true;
                continue;
            }
            d.add_edge(ed.u, ed.v, ed.lu, ed.lv);
        }
        REQUIRE(dropped);
        CHECK(!compress(d));
    }
    SUBCASE("flipped child half") {
        LabeledGraph m = lifted.graph;
        for (int e = 0; e < m.num_edges(); ++e)
            if (m.edge(e).lv == EdgeLabel::ChL) {
                m.edge(e).lv = EdgeLabel::ChR;
                break;
            }
        CHECK(!compress(m));
    }
}

TEST_CASE("random lift mutations always violate check_proper") {
    for (uint64_t s = 0; s < 80; ++s) {
        BipartiteInstance b = random_instance(4 + static_cast<int>(s % 10), 6, s + 100);
        Lift lifted = lift(b, 2);
        LabeledGraph m = mutate(lifted.graph, s * 17 + 5, true);
        CHECK(!check_proper(m).empty());
    }
}
