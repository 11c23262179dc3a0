#ifndef lcllab_linearizable_hpp
#define lcllab_linearizable_hpp

#include <array>
#include <set>
#include <string>
#include <vector>

#include "lcllab/proper.hpp"

namespace lcllab {

/*
 * A linearizable bipartite labeling problem: white nodes label their
 * incident edges (in port order) with a word whose first letter lies in F,
 * consecutive letters lie in P, and last letter lies in L; black nodes of
 * degree 3 require the multiset of incident labels to lie in B; black nodes
 * of other degrees are unconstrained.
 */
struct LinearizableProblem {
    std::string name;
    int num_labels = 0;
    std::vector<std::string> label_names;
    std::set<int> first_set;                     // F
    std::set<int> last_set;                      // L
    std::set<std::pair<int, int>> pairs;         // P
    std::set<std::array<int, 3>> black_triples;  // B, sorted triples

    bool in_first(int a) const { return first_set.count(a) > 0; }
    bool in_last(int a) const { return last_set.count(a) > 0; }
    bool pair_ok(int a, int b) const { return pairs.count({a, b}) > 0; }
    bool black_ok(std::array<int, 3> t) const;
};

// violations over a bipartite instance: node = white id, or
// num_whites + black id for black-side rules
std::vector<Violation> check_linearizable(const LinearizableProblem& p,
                                          const BipartiteInstance& b,
                                          const std::vector<int>& edge_labels);

/*
 * Iterated GHZ as a linearizable problem. Edge labels carry the white's
 * input/output bit pair for the game: (first, y) for a white's first edge
 * (the input bit is fixed to 0) and (other, x, y) later, with the chaining
 * rule y_i = x_{i+1} expressed through P. For a degree-3 black: if all three
 * whites play their first game the y-multiset must be {0,0,1}; otherwise if
 * the x-sum is even the y-parity must equal the x-disjunction.
 */
constexpr int kNumGhzLabels = 6;
int ghz_label(bool first, int x, int y);  // first labels ignore x
bool ghz_is_first(int label);
int ghz_x(int label);  // 0 for first labels
int ghz_y(int label);
const char* ghz_label_name(int label);

LinearizableProblem iterghz_as_linearizable();

std::vector<Violation> check_iterghz(const BipartiteInstance& b,
                                     const std::vector<int>& edge_labels);

} // namespace lcllab

#endif
