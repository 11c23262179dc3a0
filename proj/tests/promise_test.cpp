#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "lcllab/ghz.hpp"
#include "lcllab/promise.hpp"

using namespace lcllab;
using namespace lcllab::testing;

namespace {

BipartiteInstance small_instance() {
    BipartiteInstance b = BipartiteInstance::make(4, 3);
    b.add_edge(0, 0);
    b.add_edge(1, 0);
    b.add_edge(2, 0);
    b.add_edge(1, 1);
    b.add_edge(2, 1);
    b.add_edge(3, 1);
    b.add_edge(2, 2);
    b.add_edge(3, 2);
    b.add_edge(3, 2);
    return b;
}

} // namespace

TEST_CASE("clean lifts have no exemptions") {
    Lift lifted = lift(small_instance(), 2);
    PromiseContext ctx = make_promise_context(lifted.graph);
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v) {
        CHECK(!ctx.proper_violation[v]);
        CHECK(!ctx.exempt[v]);
    }
}

TEST_CASE("quantum solutions map to valid promise outputs") {
    BipartiteInstance b = small_instance();
    Lift lifted = lift(b, 2);
    for (uint64_t s = 0; s < 20; ++s) {
        QuantumRun run = quantum_solve_iterghz(b, s);
        std::vector<int> prom = edge_labels_to_promise(lifted, run.edge_labels);
        CHECK(check_promise(lifted.graph, prom).empty());
    }
}

TEST_CASE("promise and edge labelings are in bijection") {
    BipartiteInstance b = small_instance();
    Lift lifted = lift(b, 2);
    int ne = static_cast<int>(b.edges.size());
    for (uint64_t s = 0; s < 100; ++s) {
        QuantumRun run = quantum_solve_iterghz(b, s);
        std::vector<int> prom = edge_labels_to_promise(lifted, run.edge_labels);
        std::optional<std::vector<int>> back = promise_to_edge_labels(lifted, ne, prom);
        REQUIRE(back);
        CHECK(*back == run.edge_labels);
        CHECK(edge_labels_to_promise(lifted, *back) == prom);
    }
}

TEST_CASE("promise_to_edge_labels rejects malformed outputs") {
    BipartiteInstance b = small_instance();
    Lift lifted = lift(b, 2);
    int ne = static_cast<int>(b.edges.size());
    std::vector<int> prom =
        edge_labels_to_promise(lifted, quantum_solve_iterghz(b, 1).edge_labels);

    SUBCASE("non-Bottom on a head node") {
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.comp[v].kind == CompRef::White) {
                prom[v] = 1;
                break;
            }
        CHECK(!promise_to_edge_labels(lifted, ne, prom));
    }
    SUBCASE("Bottom on a port node") {
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.comp[v].kind == CompRef::EdgePort) {
                prom[v] = kPromiseBottom;
                break;
            }
        CHECK(!promise_to_edge_labels(lifted, ne, prom));
    }
    SUBCASE("port gadget disagreeing with itself") {
        // height-2 gadgets have three nodes; flip one of them
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.comp[v].kind == CompRef::EdgePort) {
                prom[v] = prom[v] == 1 ? 2 : 1;
                break;
            }
        CHECK(!promise_to_edge_labels(lifted, ne, prom));
    }
}

TEST_CASE("promise checker rules fire on targeted breaks") {
    BipartiteInstance b = small_instance();
    Lift lifted = lift(b, 2);
    std::vector<int> prom =
        edge_labels_to_promise(lifted, quantum_solve_iterghz(b, 3).edge_labels);
    REQUIRE(check_promise(lifted.graph, prom).empty());

    auto has_rule = [](const std::vector<Violation>& vio, const std::string& rule) {
        return std::any_of(vio.begin(), vio.end(),
                           [&](const Violation& v) { return v.rule == rule; });
    };

    SUBCASE("Bottom on a port") {
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.comp[v].kind == CompRef::EdgePort) {
                prom[v] = kPromiseBottom;
                break;
            }
        CHECK(has_rule(check_promise(lifted.graph, prom), "promise.1"));
    }
    SUBCASE("letter on an inter node") {
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.graph.label(v) == NodeLabel::Inter) {
                prom[v] = 3;
                break;
            }
        CHECK(has_rule(check_promise(lifted.graph, prom), "promise.2"));
    }
    SUBCASE("out-of-range code") {
        prom[0] = kNumPromiseLabels;
        CHECK(has_rule(check_promise(lifted.graph, prom), "promise.alphabet"));
    }
    SUBCASE("disagreeing port gadget") {
        for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
            if (lifted.comp[v].kind == CompRef::EdgePort) {
                prom[v] = prom[v] == 1 ? 2 : 1;
                CHECK(!check_promise(lifted.graph, prom).empty());
                break;
            }
    }
    SUBCASE("word no longer starts in F") {
        // relabel white 0's only edge to a non-first letter; white 0 has
        // degree 1, so its single port is both first and last
        std::vector<int> labels = quantum_solve_iterghz(b, 3).edge_labels;
        labels[0] = ghz_label(false, 0, 0);
        prom = edge_labels_to_promise(lifted, labels);
        CHECK(has_rule(check_promise(lifted.graph, prom), "promise.4"));
    }
    SUBCASE("black triple broken") {
        // flip the y bit of one label; some rule must notice
        std::vector<int> labels = quantum_solve_iterghz(b, 3).edge_labels;
        labels[2] = ghz_label(ghz_is_first(labels[2]), ghz_x(labels[2]),
                              1 - ghz_y(labels[2]));
        prom = edge_labels_to_promise(lifted, labels);
        CHECK(!check_promise(lifted.graph, prom).empty());
    }
}

TEST_CASE("nodes near a proper violation are exempt") {
    Lift lifted = lift(small_instance(), 2);
    LabeledGraph m = lifted.graph;
    bool flipped = false;
    for (int e = 0; e < m.num_edges() && !flipped; ++e)
        if (m.edge(e).lv == EdgeLabel::ChL) {
            m.edge(e).lv = EdgeLabel::ChR;
            flipped = true;
        }
    REQUIRE(flipped);
    PromiseContext ctx = make_promise_context(m);
    int exempt = 0;
    for (NodeId v = 0; v < m.num_nodes(); ++v) exempt += ctx.exempt[v];
    CHECK(exempt > 0);
    CHECK(exempt < m.num_nodes());

    // any output is fine on exempt nodes: all-Bottom only blames clean ports
    std::vector<int> prom(m.num_nodes(), kPromiseBottom);
    for (const Violation& v : check_promise(m, prom)) CHECK(!ctx.exempt[v.node]);
}

TEST_CASE("check_pi accepts solver output and rejects all-Bottom on clean lifts") {
    Lift lifted = lift(small_instance(), 2);
    PiOutcome po = solve_pi(lifted.graph, 9);
    CHECK(po.compressed);
    CHECK(check_pi(lifted.graph, po.out).empty());
    for (int code : po.out) CHECK(pi_is_promise(code));

    std::vector<int> bottom(lifted.graph.num_nodes(), kPromiseBottom);
    CHECK(!check_pi(lifted.graph, bottom).empty());
}

TEST_CASE("solve_pi handles broken lifts") {
    Lift lifted = lift(small_instance(), 2);
    for (uint64_t s = 0; s < 30; ++s) {
        LabeledGraph m = mutate(lifted.graph, s * 41 + 7, true);
        PiOutcome po = solve_pi(m, s);
        CHECK(check_pi(m, po.out).empty());
        int errs = 0;
        for (int code : po.out) errs += !pi_is_promise(code);
        CHECK(errs > 0);
    }
}

TEST_CASE("solve_pi is deterministic and locally bounded") {
    BipartiteInstance b = random_instance(12, 6, 3);
    Lift lifted = lift(b, 2);
    PiOutcome a = solve_pi(lifted.graph, 5);
    PiOutcome c = solve_pi(lifted.graph, 5);
    CHECK(a.out == c.out);
    CHECK(a.radius == c.radius);

    int n = lifted.graph.num_nodes();
    double log2n = std::log2(static_cast<double>(n));
    for (int rad : a.radius) CHECK(rad <= 10 * log2n);
}

TEST_CASE("empty graphs are trivially valid") {
    LabeledGraph g;
    PiOutcome po = solve_pi(g, 1);
    CHECK(po.out.empty());
    CHECK(check_pi(g, po.out).empty());
}

TEST_CASE("pi brute force finds a valid labeling on a tiny lift") {
    BipartiteInstance b = BipartiteInstance::make(1, 1);
    b.add_edge(0, 0);
    b.add_edge(0, 0);
    b.add_edge(0, 0);
    Lift lifted = lift(b, 1);
    LclProblem p = make_pi_problem();
    std::optional<Labeling> sol =
        brute_force_solve(p, lifted.graph, Labeling::empty(lifted.graph));
    REQUIRE(sol);
    std::vector<int> out(lifted.graph.num_nodes());
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v) out[v] = *sol->node[v];
    CHECK(check_pi(lifted.graph, out).empty());
    for (int code : out) CHECK(pi_is_promise(code));
}
