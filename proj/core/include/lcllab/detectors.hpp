#ifndef lcllab_detectors_hpp
#define lcllab_detectors_hpp

#include <optional>
#include <vector>

#include "lcllab/proper.hpp"

namespace lcllab {

/*
 * Error-detection problems layered on the gadget structure. Each problem
 * lets every node output Bottom; the point is that on a clean, unmarked
 * gadget the all-Bottom labeling is the only valid one, while any broken or
 * marked component admits (and the solvers produce) an all-non-Bottom
 * labeling computed with O(log n) visibility.
 */

enum class Tri : int8_t { False = 0, True = 1, Unknown = 2 };

inline Tri tri_or(Tri a, Tri b) {
    if (a == Tri::True || b == Tri::True) return Tri::True;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::False;
}

// ---------------------------------------------------------------- badtree

/*
 * Outputs on tree gadgets: Err is allowed only within distance 2 of a mark
 * or a local tree-constraint violation; every other non-Bottom node points
 * at its parent (Up), right child (Down), or a sibling (Left/Right).
 * Pointer chains run vertically, then horizontally, then end in Err:
 *   Up    -> {Up, Left, Right, Err}      Down  -> {Down, Left, Right, Err}
 *   Left  -> {Left, Err}                 Right -> {Right, Err}
 * Each phase moves monotonically through the gadget coordinates and a
 * vertical pointer never follows a horizontal one, so a clean unmarked
 * gadget has no valid non-Bottom output. Pointing at a left child is never
 * allowed.
 */
enum class BadTreeLabel : uint8_t { Bottom, Err, Up, Down, Left, Right };
constexpr int kNumBadTreeLabels = 6;
const char* to_string(BadTreeLabel l);

// witness = marked or locally violating the tree constraints
bool badtree_witness(const LabeledGraph& g, const std::vector<bool>& marks, NodeId v);

// Definite violations at v for a (possibly partial) output assignment;
// marks may be three-valued when they derive from other nodes' outputs.
std::vector<Violation> check_badtree_node(const LabeledGraph& g, const std::vector<Tri>& marks,
                                          const std::vector<std::optional<BadTreeLabel>>& out,
                                          NodeId v);
std::vector<Violation> check_badtree(const LabeledGraph& g, const std::vector<bool>& marks,
                                     const std::vector<BadTreeLabel>& out);

struct BadTreeOutcome {
    std::vector<BadTreeLabel> out;
    std::vector<int> radius;  // per-node view radius used
};
BadTreeOutcome solve_badtree(const LabeledGraph& g, const std::vector<bool>& marks);

// visibility cap of the solvers
int detector_radius(int n);

// engine wrapper (node alphabet of size 6) for search and enumeration
LclProblem make_badtree_problem(std::vector<bool> marks);

// ------------------------------------------------------------- badoctopus

/*
 * Outputs on octopus gadgets: Bottom, or a triple of badtree outputs for
 * three staged instances on the internal-edge subgraph. Stage 1 marks the
 * nodes violating the octopus constraints (or marked in the input); stage 2
 * additionally marks head nodes with a stage-1-errored neighbor across a
 * non-internal edge; stage 3 additionally marks port nodes with a
 * stage-2-errored such neighbor. The triple (Bottom, Bottom, Bottom) is not
 * a legal output.
 */
using BadOctopusLabel = int;  // 0 = Bottom, 1 + encode_triple(...) otherwise
constexpr int kNumBadOctopusLabels = 1 + kNumBadTreeLabels * kNumBadTreeLabels * kNumBadTreeLabels;

int encode_triple(BadTreeLabel a, BadTreeLabel b, BadTreeLabel c);
std::array<BadTreeLabel, 3> decode_triple(int t);

std::vector<Violation> check_badoctopus_node(
    const LabeledGraph& g, const LabeledGraph& internal, const std::vector<Tri>& marks,
    const std::vector<std::optional<BadOctopusLabel>>& out, NodeId v);
std::vector<Violation> check_badoctopus(const LabeledGraph& g, const std::vector<bool>& marks,
                                        const std::vector<BadOctopusLabel>& out);

struct BadOctopusOutcome {
    std::vector<BadOctopusLabel> out;
    std::vector<int> radius;
};
BadOctopusOutcome solve_badoctopus(const LabeledGraph& g, const std::vector<bool>& marks);

LclProblem make_badoctopus_problem(std::vector<bool> marks);

// Exhaustive solution count. The stages only couple through the derived
// mark sets, so the enumeration nests three badtree searches instead of
// walking the 217-letter alphabet; every found labeling is re-verified
// against the direct checker.
long count_badoctopus_solutions(const LabeledGraph& g, const std::vector<bool>& marks,
                                uint64_t budget = 0);

// -------------------------------------------------------------- badgraph

/*
 * Outputs on arbitrary graphs over the proper-instance alphabet: Bottom;
 * ErrInter1 (an inter node violating the proper-instance constraints);
 * ErrInter2 (an inter node none of whose neighbors output Bottom); or an
 * intra-octopus error carrying a badoctopus output for the instance induced
 * by the non-inter nodes, where a node counts as marked when it violates
 * the proper-instance constraints or neighbors an ErrInter1 node.
 * Solver guarantee: the Bottom-labeled nodes induce a proper instance.
 */
using BadGraphLabel = int;
constexpr BadGraphLabel kBgBottom = 0;
constexpr BadGraphLabel kBgErrInter1 = 1;
constexpr BadGraphLabel kBgErrInter2 = 2;
constexpr BadGraphLabel kBgIntraBase = 3;  // kBgIntraBase + t encodes triple t
constexpr int kNumBadGraphLabels = kBgIntraBase + kNumBadOctopusLabels - 1;

// context shared by the badgraph checker and solver
struct BadGraphContext {
    ProperContext proper;
    LabeledGraph intra_induced;        // induced subgraph on non-inter nodes
    LabeledGraph intra_internal;       // its internal edges
    std::vector<NodeId> intra_to_orig;
    std::vector<NodeId> orig_to_intra;  // -1 for inter nodes
    std::vector<bool> proper_violation;
};
BadGraphContext make_badgraph_context(const LabeledGraph& g);

std::vector<Violation> check_badgraph_node(const LabeledGraph& g, const BadGraphContext& ctx,
                                           const std::vector<std::optional<BadGraphLabel>>& out,
                                           NodeId v);
std::vector<Violation> check_badgraph(const LabeledGraph& g,
                                      const std::vector<BadGraphLabel>& out);

struct BadGraphOutcome {
    std::vector<BadGraphLabel> out;
    std::vector<int> radius;
};
BadGraphOutcome solve_badgraph(const LabeledGraph& g);

LclProblem make_badgraph_problem();

} // namespace lcllab

#endif
