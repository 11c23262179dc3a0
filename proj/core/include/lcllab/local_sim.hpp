#ifndef lcllab_local_sim_hpp
#define lcllab_local_sim_hpp

#include <functional>
#include <optional>

#include <nlohmann/json.hpp>

#include "lcllab/graph.hpp"
#include "lcllab/rng.hpp"

namespace lcllab {

// reproducible private randomness: distinct keyed streams per (node, round)
KeyedRng node_rng(uint64_t seed, uint64_t node_key, int round);

// what a node knows before any communication
struct LocalInfo {
    NodeId node = kBottom;  // runtime index; programs should key on input.ident
    NodeLabel label = NodeLabel::None;
    NodeInput input;
    std::vector<EdgeLabel> ports;  // own half-edge labels in port order
};

/*
 * A synchronous-round program. Each round an undecided node is stepped with
 * the messages received on its ports (null when none); it may fill the
 * outbox (one message per port) and decide by setting `out`, after which its
 * state is frozen and it neither steps nor sends again. Messages placed in
 * the outbox of the deciding step are still delivered.
 */
class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual nlohmann::json init(const LocalInfo& info, KeyedRng& rng) const = 0;
    virtual nlohmann::json step(const LocalInfo& info, nlohmann::json state,
                                const std::vector<nlohmann::json>& inbox,
                                std::vector<nlohmann::json>& outbox,
                                std::optional<nlohmann::json>& out, KeyedRng& rng) const = 0;
};

struct RunTrace {
    std::vector<nlohmann::json> output;
    std::vector<int> rounds;  // round index at which each node decided
    std::vector<int> radius;  // taint-tracked effective view radius
    int total_rounds = 0;
};

// throws std::runtime_error when some node is still undecided after round
// max_rounds
RunTrace run_sync(const LabeledGraph& g, const NodeProgram& prog, uint64_t seed, int max_rounds);

// execute an algorithm given as a function of radius-T views; equivalent to
// a T-round run with T = radius_fn(g, v) per node
RunTrace run_as_view_function(const LabeledGraph& g,
                              const std::function<int(const LabeledGraph&, NodeId)>& radius_fn,
                              const std::function<nlohmann::json(const View&, uint64_t)>& output_fn,
                              uint64_t seed);

/*
 * Knowledge-flooding program: every round each node merges its neighbors'
 * knowledge, reconstructing its open radius-r view after r rounds, and asks
 * `decide` whether that suffices. `stable` is set once a round brought
 * nothing new, which happens exactly when the whole component is known.
 */
class GatherProgram : public NodeProgram {
public:
    struct Ball {
        LabeledGraph graph;  // known subgraph; nodes in increasing ident order
        NodeId center = kBottom;  // local id of the deciding node
        int rounds = 0;
        bool stable = false;
    };
    using Decide = std::function<std::optional<nlohmann::json>(const Ball&)>;

    explicit GatherProgram(Decide decide) : decide_(std::move(decide)) {}

    nlohmann::json init(const LocalInfo& info, KeyedRng& rng) const override;
    nlohmann::json step(const LocalInfo& info, nlohmann::json state,
                        const std::vector<nlohmann::json>& inbox,
                        std::vector<nlohmann::json>& outbox,
                        std::optional<nlohmann::json>& out, KeyedRng& rng) const override;

private:
    Decide decide_;
};

} // namespace lcllab

#endif
