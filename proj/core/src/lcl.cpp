#include "lcllab/lcl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace lcllab {

bool is_complete(const LclProblem& p, const LabeledGraph& g, const Labeling& lab) {
    if (p.node_alphabet.size() > 1)
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            if (!lab.node[v]) return false;
    if (p.half_edge_alphabet.size() > 1)
        for (int e = 0; e < g.num_edges(); ++e)
            if (!lab.half[e][0] || !lab.half[e][1]) return false;
    return true;
}

std::vector<Violation> check_node(const LclProblem& p, const LabeledGraph& g,
                                  const Labeling& lab, NodeId v) {
    return p.check(g, lab, v);
}

std::vector<Violation> check_all(const LclProblem& p, const LabeledGraph& g,
                                 const Labeling& lab) {
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = p.check(g, lab, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

uint64_t default_budget() {
    if (const char* env = std::getenv("LCLLAB_BUDGET")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ull;
}

namespace {

// a variable of the search: a node output or a half-edge output slot
struct Slot {
    NodeId node;       // node whose assignment this is (owner of the half-edge)
    int edge = -1;     // -1 for node slots
};

struct Search {
    const LclProblem& p;
    const LabeledGraph& g;
    Labeling lab;
    std::vector<Slot> slots;
    uint64_t budget;
    uint64_t used = 0;
    std::vector<std::vector<NodeId>> affected;  // slot -> nodes to recheck

    Search(const LclProblem& p_, const LabeledGraph& g_, const Labeling& partial,
           uint64_t budget_)
        : p(p_), g(g_), lab(partial), budget(budget_ ? budget_ : default_budget()) {
        if (lab.node.size() != static_cast<size_t>(g.num_nodes()) ||
            lab.half.size() != static_cast<size_t>(g.num_edges()))
            throw std::invalid_argument("partial labeling shape mismatch");
        // visit nodes in BFS order so constraints bind soon after assignment
        std::vector<char> seen(g.num_nodes(), 0);
        std::vector<NodeId> order;
        for (NodeId s = 0; s < g.num_nodes(); ++s) {
            if (seen[s]) continue;
            std::deque<NodeId> queue{s};
            seen[s] = 1;
            while (!queue.empty()) {
                NodeId v = queue.front();
                queue.pop_front();
                order.push_back(v);
                for (int e : g.incident(v)) {
                    NodeId w = g.other(e, v);
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        for (NodeId v : order) {
            if (p.node_alphabet.size() > 1 && !lab.node[v]) slots.push_back({v, -1});
            if (p.half_edge_alphabet.size() > 1)
                for (int e : g.incident(v))
                    if (!lab.half_at(g, e, v)) slots.push_back({v, e});
        }
        for (const Slot& s : slots) {
            std::vector<int> dist = bfs_dist(g, s.node);
            std::vector<NodeId> aff;
            for (NodeId v = 0; v < g.num_nodes(); ++v)
                if (dist[v] >= 0 && dist[v] <= p.radius) aff.push_back(v);
            affected.push_back(std::move(aff));
        }
    }

    bool violated_near(size_t slot) const {
        for (NodeId v : affected[slot])
            if (!p.check(g, lab, v).empty()) return true;
        return false;
    }

    // DFS over slots; visit() on complete assignments, return false to abort
    bool run(size_t i, const std::function<bool(const Labeling&)>& visit) {
        if (i == slots.size()) return visit(lab);
        const Slot& s = slots[i];
        const size_t domain =
            s.edge < 0 ? p.node_alphabet.size() : p.half_edge_alphabet.size();
        std::optional<int>& cell =
            s.edge < 0 ? lab.node[s.node] : lab.half_at(g, s.edge, s.node);
        for (size_t value = 0; value < domain; ++value) {
            if (++used > budget) throw BudgetExceeded(p.name + ": assignment budget exhausted");
            cell = static_cast<int>(value);
            if (!violated_near(i)) {
                if (!run(i + 1, visit)) { cell.reset(); return false; }
            }
        }
        cell.reset();
        return true;
    }
};

} // namespace

std::optional<Labeling> brute_force_solve(const LclProblem& p, const LabeledGraph& g,
                                          const Labeling& partial, uint64_t budget) {
    // preassigned slots may already be contradictory
    Search search(p, g, partial, budget);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (!search.p.check(g, search.lab, v).empty()) return std::nullopt;
    std::optional<Labeling> found;
    search.run(0, [&](const Labeling& lab) {
        if (check_all(p, g, lab).empty()) {
            found = lab;
            return false;
        }
        return true;
    });
    return found;
}

void enumerate_solutions(const LclProblem& p, const LabeledGraph& g, const Labeling& partial,
                         const std::function<bool(const Labeling&)>& visit, uint64_t budget) {
    Search search(p, g, partial, budget);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (!search.p.check(g, search.lab, v).empty()) return;
    search.run(0, [&](const Labeling& lab) {
        if (!check_all(p, g, lab).empty()) return true;
        return visit(lab);
    });
}

} // namespace lcllab
