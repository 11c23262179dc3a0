#ifndef lcllab_depsim_hpp
#define lcllab_depsim_hpp

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lcllab/lcl.hpp"
#include "lcllab/rng.hpp"

namespace lcllab {

/*
 * A bounded-dependence outcome: a distribution over node labelings that is
 * non-signaling beyond its locality T (marginals on S depend only on the
 * radius-T view of S) and 2T-dependent (restrictions to sets at distance
 * > 2T are independent). Conditional access is only required of enumerable
 * (table-backed) outcomes.
 */
class Outcome {
public:
    virtual ~Outcome() = default;
    virtual int locality() const = 0;
    virtual std::vector<int> sample(const LabeledGraph& g, uint64_t seed) const = 0;
    // sample the marginal on `subset`, conditioned on `given`; returned in
    // subset order
    virtual std::vector<int> sample_restricted(
        const LabeledGraph& g, std::span<const NodeId> subset,
        const std::vector<std::pair<NodeId, int>>& given, uint64_t seed) const = 0;
};

// explicit distribution over full labelings of one fixed graph
class TableOutcome : public Outcome {
public:
    using Table = std::vector<std::pair<std::vector<int>, double>>;
    TableOutcome(int locality, Table table);

    int locality() const override { return locality_; }
    std::vector<int> sample(const LabeledGraph& g, uint64_t seed) const override;
    std::vector<int> sample_restricted(
        const LabeledGraph& g, std::span<const NodeId> subset,
        const std::vector<std::pair<NodeId, int>>& given, uint64_t seed) const override;

    // exact conditional marginal, normalized
    std::map<std::vector<int>, double> marginal(
        std::span<const NodeId> subset,
        const std::vector<std::pair<NodeId, int>>& given) const;

private:
    int locality_;
    Table table_;
};

// outcome induced by running a (randomized) algorithm; restricted samples
// run the algorithm on the radius-T view of the subset, which matches the
// marginal law by non-signaling; conditioning is unsupported
class AlgorithmOutcome : public Outcome {
public:
    using Solver = std::function<std::vector<int>(const LabeledGraph&, uint64_t)>;
    AlgorithmOutcome(int locality, Solver solver)
        : locality_(locality), solver_(std::move(solver)) {}

    int locality() const override { return locality_; }
    std::vector<int> sample(const LabeledGraph& g, uint64_t seed) const override {
        return solver_(g, seed);
    }
    std::vector<int> sample_restricted(
        const LabeledGraph& g, std::span<const NodeId> subset,
        const std::vector<std::pair<NodeId, int>>& given, uint64_t seed) const override;

private:
    int locality_;
    Solver solver_;
};

/*
 * Low-diameter clustering computed by ball carving on the r-th power graph:
 * clusters are pairwise farther than r apart in g, the leftover set D has
 * at most eps * n nodes, and cluster diameters are O(r log n / eps).
 */
struct Clustering {
    std::vector<std::vector<NodeId>> clusters;
    std::vector<NodeId> leftover;  // D
    std::vector<int> cluster_of;   // -1 for leftover nodes
    double eps = 0;
    int r = 1;
};
Clustering cluster(const LabeledGraph& g, int r, double eps);

// partition of D into parts of pairwise distance > 2T, each part the
// closure of iterated radius-2T exploration
struct DPartition {
    std::vector<std::vector<NodeId>> parts;
};
DPartition partition_D(const LabeledGraph& g, const std::vector<NodeId>& leftover, int locality);

// independent per-part samples of the outcome's marginals; the joint law
// equals the outcome's restriction to D by 2T-dependence
std::vector<std::pair<NodeId, int>> sample_D(const Outcome& outcome, const LabeledGraph& g,
                                             const DPartition& dp, uint64_t seed);

// per-cluster brute-force completion against the frozen leftover labels;
// nullopt when some cluster admits no completion
std::optional<std::vector<int>> complete_clusters(
    const LclProblem& p, const LabeledGraph& g, const Clustering& cl,
    const std::vector<std::pair<NodeId, int>>& frozen, uint64_t budget = 0);

struct SimulateResult {
    std::optional<std::vector<int>> labeling;
    Clustering clustering;
    DPartition dpart;
    int max_locality = 0;
};

// the full pipeline: cluster (eps defaults to 1/sqrt(n*T)), partition D,
// sample D, complete the clusters
SimulateResult simulate(const Outcome& outcome, const LclProblem& p, const LabeledGraph& g,
                        uint64_t seed, std::optional<double> eps = std::nullopt,
                        uint64_t budget = 0);

/*
 * Online conditional-sampling adapter: nodes are revealed one at a time;
 * each revealed node is sampled from the outcome's marginal conditioned on
 * the commitments in its partial-run component (revealed nodes within
 * distance 2T chain into one component). Requires conditional access, i.e.
 * a table-backed outcome.
 */
std::vector<int> online_adapter(const Outcome& outcome, const LabeledGraph& g,
                                std::span<const NodeId> reveal_order, uint64_t seed);

} // namespace lcllab

#endif
