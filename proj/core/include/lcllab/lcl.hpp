#ifndef lcllab_lcl_hpp
#define lcllab_lcl_hpp

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcllab/graph.hpp"

namespace lcllab {

struct Violation {
    NodeId node;
    std::string rule;
};

/*
 * A (possibly partial) output labeling: every node and half-edge slot is
 * either Unassigned (nullopt) or holds an index into the problem's output
 * alphabet. Unassigned is deliberately distinct from any alphabet value;
 * "no output" labels like Bottom are ordinary alphabet members.
 */
struct Labeling {
    std::vector<std::optional<int>> node;
    // per edge: [0] = half-edge at edge.u, [1] = half-edge at edge.v
    std::vector<std::array<std::optional<int>, 2>> half;

    static Labeling empty(const LabeledGraph& g) {
        Labeling lab;
        lab.node.resize(g.num_nodes());
        lab.half.resize(g.num_edges());
        return lab;
    }

    std::optional<int>& half_at(const LabeledGraph& g, int e, NodeId v) {
        return half[e][g.edge(e).u == v ? 0 : 1];
    }
    const std::optional<int>& half_at(const LabeledGraph& g, int e, NodeId v) const {
        return half[e][g.edge(e).u == v ? 0 : 1];
    }
};

struct LclProblem;

// true when every slot the problem cares about is assigned
bool is_complete(const LclProblem& p, const LabeledGraph& g, const Labeling& lab);

/*
 * An LCL problem given by output alphabets, a checking radius, and a
 * constraint predicate. The predicate is three-valued on partial labelings:
 * it reports only *definite* violations (those that hold no matter how the
 * unassigned slots are filled), and must be exact on complete labelings.
 * The finite allowed-ball formulation is recovered on demand by enumerating
 * labelings of a centered ball against the predicate.
 */
struct LclProblem {
    std::string name;
    std::vector<std::string> node_alphabet;       // size 1 means "no node output"
    std::vector<std::string> half_edge_alphabet;  // size 1 means "no half-edge output"
    int radius = 1;
    std::function<std::vector<Violation>(const LabeledGraph&, const Labeling&, NodeId)> check;
};

std::vector<Violation> check_node(const LclProblem& p, const LabeledGraph& g,
                                  const Labeling& lab, NodeId v);
std::vector<Violation> check_all(const LclProblem& p, const LabeledGraph& g,
                                 const Labeling& lab);

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// default assignment budget; overridable via the LCLLAB_BUDGET env variable
uint64_t default_budget();

/*
 * Deterministic backtracking search for a complete labeling extending
 * `partial`. Returns nullopt when no completion exists; throws
 * BudgetExceeded once more than `budget` assignments were tried.
 */
std::optional<Labeling> brute_force_solve(const LclProblem& p, const LabeledGraph& g,
                                          const Labeling& partial, uint64_t budget = 0);

// Visit every complete extension of `partial` in deterministic order.
// The visitor may return false to stop early.
void enumerate_solutions(const LclProblem& p, const LabeledGraph& g, const Labeling& partial,
                         const std::function<bool(const Labeling&)>& visit,
                         uint64_t budget = 0);

} // namespace lcllab

#endif
