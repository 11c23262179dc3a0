#include "lcllab/depsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lcllab {

// ---------------------------------------------------------------- outcomes

TableOutcome::TableOutcome(int locality, Table table)
    : locality_(locality), table_(std::move(table)) {
    if (table_.empty()) throw std::invalid_argument("empty outcome table");
}

namespace {

bool matches(const std::vector<int>& row, const std::vector<std::pair<NodeId, int>>& given) {
    for (const auto& [v, l] : given)
        if (row[v] != l) return false;
    return true;
}

} // namespace

std::vector<int> TableOutcome::sample(const LabeledGraph& g, uint64_t seed) const {
    std::vector<NodeId> all(table_.front().first.size());
    std::iota(all.begin(), all.end(), 0);
    return sample_restricted(g, all, {}, seed);
}

std::vector<int> TableOutcome::sample_restricted(
    const LabeledGraph&, std::span<const NodeId> subset,
    const std::vector<std::pair<NodeId, int>>& given, uint64_t seed) const {
    double total = 0;
    for (const auto& [row, w] : table_)
        if (matches(row, given)) total += w;
    if (total <= 0) throw std::runtime_error("conditioning on a null event");
    KeyedRng rng(seed, 0x7461626c);
    double u = rng.next_double() * total;
    const std::vector<int>* chosen = &table_.back().first;
    for (const auto& [row, w] : table_) {
        if (!matches(row, given)) continue;
        if (u < w) {
            chosen = &row;
            break;
        }
        u -= w;
    }
    std::vector<int> out;
    for (NodeId v : subset) out.push_back((*chosen)[v]);
    return out;
}

std::map<std::vector<int>, double> TableOutcome::marginal(
    std::span<const NodeId> subset, const std::vector<std::pair<NodeId, int>>& given) const {
    std::map<std::vector<int>, double> m;
    double total = 0;
    for (const auto& [row, w] : table_) {
        if (!matches(row, given)) continue;
        std::vector<int> key;
        for (NodeId v : subset) key.push_back(row[v]);
        m[key] += w;
        total += w;
    }
    for (auto& [key, w] : m) w /= total;
    return m;
}

std::vector<int> AlgorithmOutcome::sample_restricted(
    const LabeledGraph& g, std::span<const NodeId> subset,
    const std::vector<std::pair<NodeId, int>>& given, uint64_t seed) const {
    if (!given.empty())
        throw std::logic_error("algorithm-backed outcomes cannot condition");
    View view = make_view(g, subset, locality_);
    std::vector<int> local = solver_(view.graph, seed);
    std::vector<int> out;
    for (NodeId v : subset) out.push_back(local[view.to_local.at(v)]);
    return out;
}

// -------------------------------------------------------------- clustering

Clustering cluster(const LabeledGraph& g, int r, double eps) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("eps out of range");
    Clustering cl;
    cl.eps = eps;
    cl.r = r;
    cl.cluster_of.assign(g.num_nodes(), -2);  // -2 = unprocessed
    LabeledGraph p = power_graph(g, r);

    for (NodeId start = 0; start < g.num_nodes(); ++start) {
        if (cl.cluster_of[start] != -2) continue;
        // grow a ball in the power graph until the next ring is small
        std::vector<NodeId> ball{start};
        std::vector<NodeId> ring{start};
        std::vector<bool> seen(g.num_nodes(), false);
        seen[start] = true;
        while (true) {
            std::vector<NodeId> next;
            for (NodeId v : ring)
                for (int e : p.incident(v)) {
                    NodeId u = p.other(e, v);
                    if (seen[u] || cl.cluster_of[u] != -2) continue;
                    seen[u] = true;
                    next.push_back(u);
                }
            if (next.size() <= eps * ball.size()) {
                // carve: the ball is a cluster, the ring around it goes to D
                int c = static_cast<int>(cl.clusters.size());
                for (NodeId v : ball) cl.cluster_of[v] = c;
                cl.clusters.push_back(std::move(ball));
                for (NodeId v : next) {
                    cl.cluster_of[v] = -1;
                    cl.leftover.push_back(v);
                }
                break;
            }
            for (NodeId v : next) ball.push_back(v);
            ring = std::move(next);
        }
    }
    return cl;
}

DPartition partition_D(const LabeledGraph& g, const std::vector<NodeId>& leftover,
                       int locality) {
    DPartition dp;
    std::vector<bool> used(leftover.size(), false);
    for (size_t i = 0; i < leftover.size(); ++i) {
        if (used[i]) continue;
        // closure of iterated radius-2T exploration
        std::vector<NodeId> part{leftover[i]};
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> dist = bfs_dist(g, part);
            for (size_t j = 0; j < leftover.size(); ++j) {
                if (used[j]) continue;
                int d = dist[leftover[j]];
                if (d >= 0 && d <= 2 * locality) {
                    part.push_back(leftover[j]);
                    used[j] = true;
                    grew = true;
                }
            }
        }
        dp.parts.push_back(std::move(part));
    }
    return dp;
}

std::vector<std::pair<NodeId, int>> sample_D(const Outcome& outcome, const LabeledGraph& g,
                                             const DPartition& dp, uint64_t seed) {
    std::vector<std::pair<NodeId, int>> frozen;
    for (size_t i = 0; i < dp.parts.size(); ++i) {
        uint64_t part_seed = mix64(seed ^ mix64(0xD000 + i));
        std::vector<int> labels = outcome.sample_restricted(g, dp.parts[i], {}, part_seed);
        for (size_t j = 0; j < dp.parts[i].size(); ++j)
            frozen.push_back({dp.parts[i][j], labels[j]});
    }
    return frozen;
}

std::optional<std::vector<int>> complete_clusters(
    const LclProblem& p, const LabeledGraph& g, const Clustering& cl,
    const std::vector<std::pair<NodeId, int>>& frozen, uint64_t budget) {
    std::vector<std::optional<int>> out(g.num_nodes());
    for (const auto& [v, l] : frozen) out[v] = l;

    for (const std::vector<NodeId>& clus : cl.clusters) {
        // work region: the cluster plus the frozen nodes within checking
        // distance (no other cluster can be that close)
        std::vector<int> dist = bfs_dist(g, clus);
        std::vector<NodeId> region;
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            if (dist[v] >= 0 && dist[v] <= p.radius) region.push_back(v);
        std::vector<NodeId> to_orig;
        LabeledGraph h = induced_subgraph(g, region, &to_orig);

        Labeling partial = Labeling::empty(h);
        for (NodeId v = 0; v < h.num_nodes(); ++v)
            if (cl.cluster_of[to_orig[v]] != cl.cluster_of[clus[0]]) {
                if (!out[to_orig[v]]) return std::nullopt;  // unlabeled frontier
                partial.node[v] = out[to_orig[v]];
            }
        std::optional<Labeling> sol = brute_force_solve(p, h, partial, budget);
        if (!sol) return std::nullopt;
        for (NodeId v = 0; v < h.num_nodes(); ++v) out[to_orig[v]] = sol->node[v];
    }

    std::vector<int> result(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (!out[v]) return std::nullopt;
        result[v] = *out[v];
    }
    return result;
}

SimulateResult simulate(const Outcome& outcome, const LclProblem& p, const LabeledGraph& g,
                        uint64_t seed, std::optional<double> eps, uint64_t budget) {
    SimulateResult res;
    int t = std::max(1, outcome.locality());
    double e = eps ? *eps
                   : 1.0 / std::sqrt(static_cast<double>(std::max(1, g.num_nodes())) * t);
    e = std::clamp(e, 1e-9, 1.0);
    res.clustering = cluster(g, p.radius, e);
    res.dpart = partition_D(g, res.clustering.leftover, t);
    std::vector<std::pair<NodeId, int>> frozen = sample_D(outcome, g, res.dpart, seed);
    res.labeling = complete_clusters(p, g, res.clustering, frozen, budget);

    for (const std::vector<NodeId>& clus : res.clustering.clusters) {
        int d = estimate_diameter(g, clus[0]).diameter;  // component bound
        res.max_locality = std::max(res.max_locality, d + p.radius);
    }
    res.max_locality = std::max(
        res.max_locality, 2 * t * static_cast<int>(res.clustering.leftover.size()));
    return res;
}

std::vector<int> online_adapter(const Outcome& outcome, const LabeledGraph& g,
                                std::span<const NodeId> reveal_order, uint64_t seed) {
    int t = outcome.locality();
    std::vector<int> outputs;
    std::vector<std::vector<NodeId>> comps;        // partial-run components
    std::vector<std::vector<std::pair<NodeId, int>>> commits;

    for (size_t i = 0; i < reveal_order.size(); ++i) {
        NodeId v = reveal_order[i];
        std::vector<int> dist = bfs_dist(g, v);
        // merge every component that chains to v within 2T
        std::vector<NodeId> merged_nodes;
        std::vector<std::pair<NodeId, int>> merged_commits;
        std::vector<std::vector<NodeId>> rest;
        std::vector<std::vector<std::pair<NodeId, int>>> rest_commits;
        for (size_t c = 0; c < comps.size(); ++c) {
            bool close = false;
            for (NodeId u : comps[c]) {
                int d = dist[u];
                if (d >= 0 && d <= 2 * t) close = true;
            }
            if (close) {
                merged_nodes.insert(merged_nodes.end(), comps[c].begin(), comps[c].end());
                merged_commits.insert(merged_commits.end(), commits[c].begin(),
                                      commits[c].end());
            } else {
                rest.push_back(std::move(comps[c]));
                rest_commits.push_back(std::move(commits[c]));
            }
        }
        std::vector<NodeId> subset{v};
        uint64_t step_seed = mix64(seed ^ mix64(0xA110 + i));
        int label = outcome.sample_restricted(g, subset, merged_commits, step_seed)[0];
        outputs.push_back(label);

        merged_nodes.push_back(v);
        merged_commits.push_back({v, label});
        rest.push_back(std::move(merged_nodes));
        rest_commits.push_back(std::move(merged_commits));
        comps = std::move(rest);
        commits = std::move(rest_commits);
    }
    return outputs;
}

} // namespace lcllab
