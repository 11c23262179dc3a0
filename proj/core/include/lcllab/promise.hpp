#ifndef lcllab_promise_hpp
#define lcllab_promise_hpp

#include <optional>
#include <vector>

#include "lcllab/detectors.hpp"
#include "lcllab/linearizable.hpp"

namespace lcllab {

/*
 * The promise problem: iterated GHZ pulled through the lift. On a proper
 * instance every port node outputs the label of the bipartite edge its
 * gadget stands for (all nodes of one port gadget agree) and every other
 * node outputs Bottom; the word/black constraints are read off the gadget
 * structure by path-following. Nodes within distance 3 of a node violating
 * the proper-instance constraints are exempt from all output constraints.
 *
 * Output codes: 0 = Bottom, 1 + sigma for the linearizable labels.
 */
constexpr int kPromiseBottom = 0;
constexpr int kNumPromiseLabels = 1 + kNumGhzLabels;
constexpr int kPromiseExemptRadius = 3;

struct PromiseContext {
    ProperContext proper;
    LinearizableProblem lp;
    std::vector<bool> proper_violation;
    std::vector<bool> exempt;  // violation within kPromiseExemptRadius
};
PromiseContext make_promise_context(const LabeledGraph& g);

// Rules "promise.1" .. "promise.8" plus "promise.alphabet"; definite
// violations only on partial assignments.
std::vector<Violation> check_promise_node(const LabeledGraph& g, const PromiseContext& ctx,
                                          const std::vector<std::optional<int>>& out, NodeId v);
std::vector<Violation> check_promise(const LabeledGraph& g, const std::vector<int>& out);

// Promise solutions on a lift correspond to linearizable solutions of the
// instance: each edge's label is the shared output of its port gadget.
std::vector<int> edge_labels_to_promise(const Lift& lifted, const std::vector<int>& edge_labels);
std::optional<std::vector<int>> promise_to_edge_labels(const Lift& lifted, int num_edges,
                                                       const std::vector<int>& promise_out);

/*
 * The full problem Pi: a node outputs either a badgraph label (non-Bottom)
 * or a promise output; the badgraph projection (promise outputs read as
 * Bottom) must satisfy the badgraph constraints, and the promise outputs
 * must satisfy the promise constraints on the subgraph they induce.
 *
 * Codes: 0..6 = promise outputs (0 = Bottom), 7 + (bg - 1) for the
 * non-Bottom badgraph labels bg.
 */
constexpr int kPiPromiseLabels = kNumPromiseLabels;
constexpr int kNumPiLabels = kPiPromiseLabels + kNumBadGraphLabels - 1;

inline bool pi_is_promise(int code) { return code < kPiPromiseLabels; }
inline BadGraphLabel pi_bg(int code) {
    return code < kPiPromiseLabels ? kBgBottom : code - kPiPromiseLabels + 1;
}
inline int pi_from_bg(BadGraphLabel bg) { return kPiPromiseLabels + bg - 1; }

std::vector<Violation> check_pi(const LabeledGraph& g, const std::vector<int>& out);

LclProblem make_pi_problem();

struct PiOutcome {
    std::vector<int> out;
    std::vector<int> radius;   // per-node view radius used
    bool compressed = false;   // Bottom part compressed to a bipartite instance
};
PiOutcome solve_pi(const LabeledGraph& g, uint64_t seed);

} // namespace lcllab

#endif
