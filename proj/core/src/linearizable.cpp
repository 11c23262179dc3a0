#include "lcllab/linearizable.hpp"

#include <algorithm>

namespace lcllab {

bool LinearizableProblem::black_ok(std::array<int, 3> t) const {
    std::sort(t.begin(), t.end());
    return black_triples.count(t) > 0;
}

std::vector<Violation> check_linearizable(const LinearizableProblem& p,
                                          const BipartiteInstance& b,
                                          const std::vector<int>& edge_labels) {
    std::vector<Violation> vio;
    for (int w = 0; w < b.num_whites; ++w) {
        const std::vector<int>& word = b.white_edges[w];
        if (word.empty()) continue;
        if (!p.in_first(edge_labels[word.front()]))
            vio.push_back({w, p.name + ".first"});
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (!p.pair_ok(edge_labels[word[i]], edge_labels[word[i + 1]]))
                vio.push_back({w, p.name + ".pair"});
        if (!p.in_last(edge_labels[word.back()])) vio.push_back({w, p.name + ".last"});
    }
    for (int bl = 0; bl < b.num_blacks; ++bl) {
        if (b.black_edges[bl].size() != 3) continue;
        std::array<int, 3> t{edge_labels[b.black_edges[bl][0]],
                             edge_labels[b.black_edges[bl][1]],
                             edge_labels[b.black_edges[bl][2]]};
        if (!p.black_ok(t)) vio.push_back({b.num_whites + bl, p.name + ".black"});
    }
    return vio;
}

int ghz_label(bool first, int x, int y) {
    if (first) return y & 1;
    return 2 + 2 * (x & 1) + (y & 1);
}

bool ghz_is_first(int label) { return label < 2; }
int ghz_x(int label) { return label < 2 ? 0 : (label - 2) / 2; }
int ghz_y(int label) { return label < 2 ? label : (label - 2) % 2; }

const char* ghz_label_name(int label) {
    static const char* names[kNumGhzLabels] = {"first_y0", "first_y1", "x0_y0",
                                               "x0_y1",    "x1_y0",    "x1_y1"};
    return names[label];
}

LinearizableProblem iterghz_as_linearizable() {
    LinearizableProblem p;
    p.name = "iterghz";
    p.num_labels = kNumGhzLabels;
    for (int l = 0; l < kNumGhzLabels; ++l) p.label_names.push_back(ghz_label_name(l));
    p.first_set = {0, 1};
    for (int l = 0; l < kNumGhzLabels; ++l) p.last_set.insert(l);
    // the next game's input is this game's output, and only the first game
    // of a white carries a first label
    for (int a = 0; a < kNumGhzLabels; ++a)
        for (int b = 2; b < kNumGhzLabels; ++b)
            if (ghz_y(a) == ghz_x(b)) p.pairs.insert({a, b});
    for (int a = 0; a < kNumGhzLabels; ++a)
        for (int b = a; b < kNumGhzLabels; ++b)
            for (int c = b; c < kNumGhzLabels; ++c) {
                bool all_first = ghz_is_first(a) && ghz_is_first(b) && ghz_is_first(c);
                int xs = ghz_x(a) + ghz_x(b) + ghz_x(c);
                int ys = ghz_y(a) + ghz_y(b) + ghz_y(c);
                bool ok;
                if (all_first)
                    ok = ys == 1;  // y-multiset must be {0,0,1}
                else if (xs % 2 == 0)
                    ok = (ys % 2) == (xs > 0 ? 1 : 0);  // parity = disjunction
                else
                    ok = true;
                if (ok) p.black_triples.insert({a, b, c});
            }
    return p;
}

std::vector<Violation> check_iterghz(const BipartiteInstance& b,
                                     const std::vector<int>& edge_labels) {
    static const LinearizableProblem p = iterghz_as_linearizable();
    return check_linearizable(p, b, edge_labels);
}

} // namespace lcllab
