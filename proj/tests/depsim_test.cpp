#include <cmath>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "lcllab/depsim.hpp"
#include "lcllab/promise.hpp"

using namespace lcllab;
using namespace lcllab::testing;

namespace {

// two path components whose bits agree within a component and are
// independent across components
LabeledGraph two_paths() {
    LabeledGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    return g;
}

TableOutcome::Table component_table() {
    TableOutcome::Table table;
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            table.push_back({{b1, b1, b1, b2, b2, b2}, 0.25});
    return table;
}

LclProblem two_coloring() {
    LclProblem p;
    p.name = "2col";
    p.node_alphabet = {"a", "b"};
    p.half_edge_alphabet = {""};
    p.radius = 1;
    p.check = [](const LabeledGraph& g, const Labeling& lab, NodeId v) {
        std::vector<Violation> out;
        if (!lab.node[v]) return out;
        for (int e : g.incident(v)) {
            NodeId u = g.other(e, v);
            if (u != v && lab.node[u] && *lab.node[u] == *lab.node[v])
                out.push_back({v, "2col.adjacent"});
        }
        return out;
    };
    return p;
}

void check_clustering_contract(const LabeledGraph& g, const Clustering& cl, int r,
                               double eps) {
    // every node is in exactly one cluster or in D
    std::vector<int> seen(g.num_nodes(), 0);
    for (size_t c = 0; c < cl.clusters.size(); ++c)
        for (NodeId v : cl.clusters[c]) {
            CHECK(cl.cluster_of[v] == static_cast<int>(c));
            ++seen[v];
        }
    for (NodeId v : cl.leftover) {
        CHECK(cl.cluster_of[v] == -1);
        ++seen[v];
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) CHECK(seen[v] == 1);
    CHECK(cl.leftover.size() <= eps * g.num_nodes() + 1e-9);

    // distinct clusters are farther than r apart
    for (const std::vector<NodeId>& clus : cl.clusters) {
        std::vector<int> dist = bfs_dist(g, clus);
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            if (cl.cluster_of[v] >= 0 && cl.cluster_of[v] != cl.cluster_of[clus[0]])
                CHECK((dist[v] < 0 || dist[v] > r));
    }
}

void check_partition_contract(const LabeledGraph& g, const DPartition& dp, int t) {
    for (size_t i = 0; i < dp.parts.size(); ++i) {
        std::vector<int> dist = bfs_dist(g, dp.parts[i]);
        for (size_t j = 0; j < dp.parts.size(); ++j) {
            if (i == j) continue;
            for (NodeId v : dp.parts[j]) CHECK((dist[v] < 0 || dist[v] > 2 * t));
        }
        // each part chains together at steps of at most 2t
        std::vector<NodeId> reach{dp.parts[i][0]};
        size_t grew = 1;
        while (grew) {
            grew = 0;
            std::vector<int> d = bfs_dist(g, reach);
            for (NodeId v : dp.parts[i]) {
                if (std::find(reach.begin(), reach.end(), v) != reach.end()) continue;
                if (d[v] >= 0 && d[v] <= 2 * t) {
                    reach.push_back(v);
                    grew = 1;
                }
            }
        }
        CHECK(reach.size() == dp.parts[i].size());
    }
}

} // namespace

TEST_CASE("table marginals are exact") {
    TableOutcome oc(1, component_table());

    std::vector<NodeId> both{0, 3};
    std::map<std::vector<int>, double> m = oc.marginal(both, {});
    REQUIRE(m.size() == 4);
    for (const auto& [key, w] : m) CHECK(w == doctest::Approx(0.25));

    std::vector<NodeId> pair{0, 1};
    m = oc.marginal(pair, {});
    REQUIRE(m.size() == 2);
    CHECK(m.at({0, 0}) == doctest::Approx(0.5));
    CHECK(m.at({1, 1}) == doctest::Approx(0.5));

    std::vector<NodeId> other{3};
    m = oc.marginal(other, {{0, 1}});  // far component: conditioning is inert
    CHECK(m.at({0}) == doctest::Approx(0.5));
    m = oc.marginal(other, {{4, 1}});  // same component: pinned
    REQUIRE(m.size() == 1);
    CHECK(m.at({1}) == doctest::Approx(1.0));
}

TEST_CASE("table sampling follows the law") {
    LabeledGraph g = two_paths();
    TableOutcome oc(1, component_table());
    const int kTrials = 4000;
    std::map<std::vector<int>, int> freq;
    for (uint64_t s = 0; s < kTrials; ++s) {
        std::vector<int> out = oc.sample(g, s);
        CHECK(out[0] == out[1]);
        CHECK(out[1] == out[2]);
        CHECK(out[3] == out[4]);
        CHECK(out[4] == out[5]);
        ++freq[{out[0], out[3]}];
    }
    double sigma = std::sqrt(kTrials * 0.25 * 0.75);
    for (const auto& [key, n] : freq) CHECK(std::abs(n - kTrials * 0.25) < 5 * sigma);

    // restricted samples come back in subset order
    std::vector<NodeId> subset{3, 0};
    std::vector<int> r = oc.sample_restricted(g, subset, {{4, 1}}, 9);
    CHECK(r[0] == 1);

    CHECK_THROWS_AS(oc.sample_restricted(g, subset, {{0, 2}}, 1), std::runtime_error);
}

TEST_CASE("algorithm outcomes are non-signaling and refuse conditioning") {
    LabeledGraph g = make_cycle(8);
    AlgorithmOutcome oc(1, [](const LabeledGraph& h, uint64_t) {
        std::vector<int> out(h.num_nodes());
        for (NodeId v = 0; v < h.num_nodes(); ++v) out[v] = h.degree(v);
        return out;
    });
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<NodeId> subset{v};
        // the radius-1 view preserves the center's degree
        CHECK(oc.sample_restricted(g, subset, {}, 0)[0] == 2);
    }
    std::vector<NodeId> subset{0};
    CHECK_THROWS_AS(oc.sample_restricted(g, subset, {{1, 0}}, 0), std::logic_error);
}

TEST_CASE("ball carving satisfies the clustering contract") {
    SUBCASE("long path") {
        LabeledGraph g = make_path(100);
        Clustering cl = cluster(g, 2, 0.1);
        check_clustering_contract(g, cl, 2, 0.1);
        CHECK(cl.clusters.size() > 1);
        CHECK(!cl.leftover.empty());
    }
    SUBCASE("complete graph carves in one ball") {
        LabeledGraph g(10);
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j) g.add_edge(i, j);
        Clustering cl = cluster(g, 1, 0.5);
        CHECK(cl.clusters.size() == 1);
        CHECK(cl.leftover.empty());
        check_clustering_contract(g, cl, 1, 0.5);
    }
    SUBCASE("gadget lift") {
        Lift lifted = lift(random_instance(8, 5, 1), 2);
        Clustering cl = cluster(lifted.graph, 3, 0.2);
        check_clustering_contract(lifted.graph, cl, 3, 0.2);
    }
    SUBCASE("eps must be in range") {
        CHECK_THROWS_AS(cluster(make_path(3), 1, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(cluster(make_path(3), 1, 1.5), std::invalid_argument);
    }
}

TEST_CASE("leftover partition separates parts by more than 2T") {
    LabeledGraph g = make_path(100);
    Clustering cl = cluster(g, 2, 0.1);
    for (int t : {1, 2}) {
        DPartition dp = partition_D(g, cl.leftover, t);
        check_partition_contract(g, dp, t);
        size_t total = 0;
        for (const std::vector<NodeId>& part : dp.parts) total += part.size();
        CHECK(total == cl.leftover.size());
    }
}

TEST_CASE("sample_D draws far parts independently with exact marginals") {
    LabeledGraph g = two_paths();
    TableOutcome oc(1, component_table());
    std::vector<NodeId> all{0, 1, 2, 3, 4, 5};
    DPartition dp = partition_D(g, all, 1);
    REQUIRE(dp.parts.size() == 2);  // one part per component

    const int kTrials = 4000;
    std::map<std::pair<int, int>, int> joint;
    for (uint64_t s = 0; s < kTrials; ++s) {
        std::vector<std::pair<NodeId, int>> frozen = sample_D(oc, g, dp, s);
        std::vector<int> by_node(6, -1);
        for (const auto& [v, l] : frozen) by_node[v] = l;
        // within-part samples follow the outcome law exactly
        CHECK(by_node[0] == by_node[1]);
        CHECK(by_node[1] == by_node[2]);
        CHECK(by_node[3] == by_node[4]);
        CHECK(by_node[4] == by_node[5]);
        ++joint[{by_node[0], by_node[3]}];
    }
    double sigma = std::sqrt(kTrials * 0.25 * 0.75);
    for (const auto& [key, n] : joint) CHECK(std::abs(n - kTrials * 0.25) < 5 * sigma);
    CHECK(joint.size() == 4);
}

TEST_CASE("complete_clusters extends frozen labels or reports failure") {
    LclProblem p = two_coloring();
    LabeledGraph g = make_path(5);
    Clustering cl;
    cl.clusters = {{1, 2, 3}};
    cl.cluster_of = {-1, 0, 0, 0, -1};
    cl.leftover = {0, 4};
    cl.r = 1;

    SUBCASE("compatible frozen endpoints") {
        std::optional<std::vector<int>> out = complete_clusters(p, g, cl, {{0, 0}, {4, 0}});
        REQUIRE(out);
        CHECK((*out)[0] == 0);
        CHECK((*out)[4] == 0);
        Labeling lab = Labeling::empty(g);
        for (NodeId v = 0; v < 5; ++v) lab.node[v] = (*out)[v];
        CHECK(check_all(p, g, lab).empty());
    }
    SUBCASE("incompatible frozen endpoints") {
        CHECK(!complete_clusters(p, g, cl, {{0, 0}, {4, 1}}));
    }
    SUBCASE("unlabeled frontier") {
        CHECK(!complete_clusters(p, g, cl, {{0, 0}}));
    }
}

TEST_CASE("simulate solves a lift through an algorithm-backed outcome") {
    BipartiteInstance b = BipartiteInstance::make(3, 2);
    b.add_edge(0, 0);
    b.add_edge(1, 0);
    b.add_edge(2, 0);
    b.add_edge(0, 1);
    b.add_edge(1, 1);
    b.add_edge(2, 1);
    Lift lifted = lift(b, 2);

    PiOutcome ref = solve_pi(lifted.graph, 1);
    int t = *std::max_element(ref.radius.begin(), ref.radius.end());
    AlgorithmOutcome oc(t, [](const LabeledGraph& h, uint64_t s) {
        return solve_pi(h, s).out;
    });
    LclProblem pi = make_pi_problem();
    SimulateResult sr = simulate(oc, pi, lifted.graph, 123, 0.15, 50000000);
    check_clustering_contract(lifted.graph, sr.clustering, pi.radius, 0.15);
    check_partition_contract(lifted.graph, sr.dpart, t);
    REQUIRE(sr.labeling);
    CHECK(check_pi(lifted.graph, *sr.labeling).empty());
    CHECK(sr.max_locality > 0);
}

TEST_CASE("online adapter keeps components consistent and independent") {
    LabeledGraph g = two_paths();
    TableOutcome oc(1, component_table());
    std::vector<NodeId> order{0, 3, 1, 4, 2, 5};
    const int kTrials = 2000;
    std::map<std::pair<int, int>, int> joint;
    for (uint64_t s = 0; s < kTrials; ++s) {
        std::vector<int> outs = online_adapter(oc, g, order, s);
        // order positions 0,2,4 reveal component {0,1,2}; 1,3,5 the other
        CHECK(outs[0] == outs[2]);
        CHECK(outs[2] == outs[4]);
        CHECK(outs[1] == outs[3]);
        CHECK(outs[3] == outs[5]);
        ++joint[{outs[0], outs[1]}];
    }
    double sigma = std::sqrt(kTrials * 0.25 * 0.75);
    for (const auto& [key, n] : joint) CHECK(std::abs(n - kTrials * 0.25) < 5 * sigma);
    CHECK(joint.size() == 4);
}

TEST_CASE("online adapter reproduces the full law under conditioning") {
    LabeledGraph g = make_path(3);
    TableOutcome::Table table = {{{0, 0, 0}, 0.5}, {{1, 1, 1}, 0.25}, {{1, 1, 0}, 0.25}};
    TableOutcome oc(1, table);
    std::vector<NodeId> order{2, 0, 1};
    const int kTrials = 6000;
    std::map<std::vector<int>, int> freq;
    for (uint64_t s = 0; s < kTrials; ++s) {
        std::vector<int> outs = online_adapter(oc, g, order, s);
        ++freq[{outs[1], outs[2], outs[0]}];  // back to node order
    }
    REQUIRE(freq.size() == 3);
    for (const auto& [row, w] : table) {
        double sigma = std::sqrt(kTrials * w * (1 - w));
        CHECK(std::abs(freq.at(row) - kTrials * w) < 5 * sigma);
    }
}
