#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lcllab/ghz.hpp"

using namespace lcllab;
using namespace lcllab::testing;

TEST_CASE("exact outcome distributions are normalized and winning") {
    for (int in = 0; in < 8; ++in) {
        std::array<int, 3> inputs{(in >> 2) & 1, (in >> 1) & 1, in & 1};
        std::array<double, 8> prob = ghz_outcome_distribution(inputs);
        double total = 0;
        for (double p : prob) total += p;
        CHECK(std::abs(total - 1.0) < 1e-12);

        int xs = inputs[0] + inputs[1] + inputs[2];
        if (xs % 2 != 0) continue;
        int want = xs > 0 ? 1 : 0;
        for (int o = 0; o < 8; ++o) {
            int parity = ((o >> 2) ^ (o >> 1) ^ o) & 1;
            // losing outcomes of even-sum games carry zero probability
            if (parity != want) CHECK(prob[o] < 1e-12);
        }
    }
}

TEST_CASE("sampled outcomes match the exact law") {
    KeyedRng rng(11);
    const int kTrials = 20000;
    for (int in : {0, 3, 5, 7}) {
        std::array<int, 3> inputs{(in >> 2) & 1, (in >> 1) & 1, in & 1};
        std::array<double, 8> prob = ghz_outcome_distribution(inputs);
        std::array<int, 8> freq{};
        for (int t = 0; t < kTrials; ++t) {
            GhzTriple tr;
            int o = 0;
            for (int q = 0; q < 3; ++q) o = o * 2 + tr.measure(q, inputs[q], rng);
            ++freq[o];
        }
        for (int o = 0; o < 8; ++o) {
            double expected = prob[o] * kTrials;
            double sigma = std::sqrt(kTrials * prob[o] * (1 - prob[o]) + 1);
            CHECK(std::abs(freq[o] - expected) < 5 * sigma + 5);
        }
    }
}

TEST_CASE("measurement order does not change the joint law") {
    KeyedRng rng(13);
    std::array<int, 3> inputs{1, 0, 1};
    std::array<double, 8> prob = ghz_outcome_distribution(inputs);
    std::array<int, 8> freq{};
    const int kTrials = 20000;
    for (int t = 0; t < kTrials; ++t) {
        GhzTriple tr;
        int y2 = tr.measure(2, inputs[2], rng);
        int y0 = tr.measure(0, inputs[0], rng);
        int y1 = tr.measure(1, inputs[1], rng);
        ++freq[y0 * 4 + y1 * 2 + y2];
    }
    for (int o = 0; o < 8; ++o) {
        double sigma = std::sqrt(kTrials * prob[o] * (1 - prob[o]) + 1);
        CHECK(std::abs(freq[o] - prob[o] * kTrials) < 5 * sigma + 5);
    }
}

TEST_CASE("probability-1 win and norm conservation") {
    KeyedRng rng(7);
    for (int trial = 0; trial < 4000; ++trial) {
        for (int in = 0; in < 8; ++in) {
            int x1 = (in >> 2) & 1, x2 = (in >> 1) & 1, x3 = in & 1;
            GhzTriple tr;
            int y1 = tr.measure(0, x1, rng);
            CHECK(std::abs(tr.norm() - 1.0) < 1e-12);
            int y2 = tr.measure(1, x2, rng);
            int y3 = tr.measure(2, x3, rng);
            CHECK(std::abs(tr.norm() - 1.0) < 1e-12);
            if ((x1 + x2 + x3) % 2 == 0) CHECK((y1 ^ y2 ^ y3) == (x1 | x2 | x3));
        }
    }
}

TEST_CASE("qubits cannot be measured twice") {
    KeyedRng rng(1);
    GhzTriple tr;
    tr.measure(0, 0, rng);
    CHECK(tr.measured(0));
    CHECK(!tr.measured(1));
    CHECK_THROWS_AS(tr.measure(0, 1, rng), std::logic_error);
    CHECK_THROWS_AS(tr.measure(3, 0, rng), std::out_of_range);
}

TEST_CASE("ghz label codec") {
    CHECK(ghz_label(true, 0, 0) == 0);
    CHECK(ghz_label(true, 1, 1) == 1);  // first labels ignore x
    CHECK(ghz_label(false, 1, 0) == 4);
    for (int l = 0; l < kNumGhzLabels; ++l) {
        if (ghz_is_first(l)) {
            CHECK(ghz_x(l) == 0);
            CHECK(ghz_label(true, 0, ghz_y(l)) == l);
        } else {
            CHECK(ghz_label(false, ghz_x(l), ghz_y(l)) == l);
        }
    }
}

TEST_CASE("iterghz linearizable structure") {
    LinearizableProblem p = iterghz_as_linearizable();
    CHECK(p.num_labels == kNumGhzLabels);
    CHECK(p.first_set == std::set<int>{0, 1});
    CHECK(p.last_set.size() == kNumGhzLabels);

    // chaining: y of the earlier label equals x of the later, never into first
    CHECK(p.pair_ok(ghz_label(true, 0, 1), ghz_label(false, 1, 0)));
    CHECK(!p.pair_ok(ghz_label(true, 0, 1), ghz_label(false, 0, 0)));
    CHECK(!p.pair_ok(ghz_label(false, 0, 0), ghz_label(true, 0, 0)));

    // all-first blacks need the y-multiset {0,0,1}
    CHECK(p.black_ok({0, 0, 1}));
    CHECK(!p.black_ok({0, 0, 0}));
    CHECK(!p.black_ok({0, 1, 1}));
    // even nonzero x-sum needs odd y-parity
    CHECK(p.black_ok({ghz_label(false, 1, 1), ghz_label(false, 1, 0), ghz_label(true, 0, 0)}));
    CHECK(!p.black_ok({ghz_label(false, 1, 0), ghz_label(false, 1, 0), ghz_label(true, 0, 0)}));
    // odd x-sum is free
    CHECK(p.black_ok({ghz_label(false, 1, 0), ghz_label(true, 0, 0), ghz_label(true, 0, 0)}));
}

TEST_CASE("check_linearizable reports word and black violations") {
    BipartiteInstance b = BipartiteInstance::make(2, 1);
    b.add_edge(0, 0);
    b.add_edge(0, 0);
    b.add_edge(1, 0);

    // valid: white 0 chains y=1 into x=1, all-first impossible here
    std::vector<int> labels{ghz_label(true, 0, 1), ghz_label(false, 1, 0),
                            ghz_label(true, 0, 1)};
    CHECK(check_iterghz(b, labels).empty());

    SUBCASE("broken chain") {
        labels[1] = ghz_label(false, 0, 0);
        std::vector<Violation> vio = check_iterghz(b, labels);
        REQUIRE(!vio.empty());
        CHECK(vio[0].node == 0);
        CHECK(vio[0].rule == "iterghz.pair");
    }
    SUBCASE("first label in the middle") {
        labels[1] = ghz_label(true, 0, 0);
        CHECK(!check_iterghz(b, labels).empty());
    }
    SUBCASE("black violation blames the black node") {
        // valid words, but x-sum 0 with odd y-sum at the black
        labels = {ghz_label(true, 0, 0), ghz_label(false, 0, 0), ghz_label(true, 0, 1)};
        std::vector<Violation> vio = check_iterghz(b, labels);
        REQUIRE(vio.size() == 1);
        CHECK(vio[0].node == b.num_whites + 0);
        CHECK(vio[0].rule == "iterghz.black");
    }
}

TEST_CASE("quantum runs always win") {
    for (uint64_t s = 0; s < 50; ++s) {
        BipartiteInstance b = random_instance(6, 6, s);
        QuantumRun run = quantum_solve_iterghz(b, s);
        CHECK(check_iterghz(b, run.edge_labels).empty());
        for (int w = 0; w < b.num_whites; ++w)
            CHECK(run.white_rounds[w] == static_cast<int>(b.white_edges[w].size()));
    }
}

TEST_CASE("quantum runs are deterministic per seed") {
    BipartiteInstance b = random_instance(8, 6, 4);
    QuantumRun a = quantum_solve_iterghz(b, 42);
    QuantumRun c = quantum_solve_iterghz(b, 42);
    CHECK(a.edge_labels == c.edge_labels);
}

TEST_CASE("lucky blacks answer 0,0,1 deterministically") {
    // every white plays this black first, so no triple is shared
    BipartiteInstance b = BipartiteInstance::make(3, 1);
    b.add_edge(0, 0);
    b.add_edge(1, 0);
    b.add_edge(2, 0);
    for (uint64_t s = 0; s < 10; ++s) {
        QuantumRun run = quantum_solve_iterghz(b, s);
        CHECK(run.edge_labels[0] == ghz_label(true, 0, 0));
        CHECK(run.edge_labels[1] == ghz_label(true, 0, 0));
        CHECK(run.edge_labels[2] == ghz_label(true, 0, 1));
        CHECK(check_iterghz(b, run.edge_labels).empty());
    }
}

TEST_CASE("parallel edges chain within one black") {
    BipartiteInstance b = BipartiteInstance::make(1, 1);
    b.add_edge(0, 0);
    b.add_edge(0, 0);
    b.add_edge(0, 0);
    for (uint64_t s = 0; s < 20; ++s) {
        QuantumRun run = quantum_solve_iterghz(b, s);
        CHECK(check_iterghz(b, run.edge_labels).empty());
    }
}
