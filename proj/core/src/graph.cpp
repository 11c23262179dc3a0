#include "lcllab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "lcllab/rng.hpp"

namespace lcllab {

const char* to_string(NodeLabel l) {
    switch (l) {
        case NodeLabel::None: return "none";
        case NodeLabel::Head: return "head";
        case NodeLabel::Port: return "port";
        case NodeLabel::Inter: return "inter";
        case NodeLabel::White: return "white";
        case NodeLabel::Black: return "black";
    }
    return "?";
}

const char* to_string(EdgeLabel l) {
    switch (l) {
        case EdgeLabel::None: return "none";
        case EdgeLabel::L: return "L";
        case EdgeLabel::R: return "R";
        case EdgeLabel::P: return "P";
        case EdgeLabel::ChL: return "ChL";
        case EdgeLabel::ChR: return "ChR";
        case EdgeLabel::Hp1: return "hp_link_1";
        case EdgeLabel::Hp2: return "hp_link_2";
        case EdgeLabel::Ph: return "ph_link";
        case EdgeLabel::Pi: return "pi_link";
        case EdgeLabel::Ip: return "ip_link";
    }
    return "?";
}

NodeLabel node_label_from_string(const std::string& s) {
    for (NodeLabel l : {NodeLabel::None, NodeLabel::Head, NodeLabel::Port,
                        NodeLabel::Inter, NodeLabel::White, NodeLabel::Black})
        if (s == to_string(l)) return l;
    throw std::invalid_argument("unknown node label: " + s);
}

EdgeLabel edge_label_from_string(const std::string& s) {
    for (EdgeLabel l : {EdgeLabel::None, EdgeLabel::L, EdgeLabel::R, EdgeLabel::P,
                        EdgeLabel::ChL, EdgeLabel::ChR, EdgeLabel::Hp1, EdgeLabel::Hp2,
                        EdgeLabel::Ph, EdgeLabel::Pi, EdgeLabel::Ip})
        if (s == to_string(l)) return l;
    throw std::invalid_argument("unknown edge label: " + s);
}

namespace {

// counts label-following walks, capped at 2 (enough to detect ambiguity)
void count_walks(const LabeledGraph& g, NodeId v, std::span<const EdgeLabel> seq,
                 size_t i, int& count, NodeId& end) {
    if (i == seq.size()) {
        ++count;
        end = v;
        return;
    }
    for (int e : g.incident(v)) {
        if (g.side(e, v) != seq[i]) continue;
        count_walks(g, g.other(e, v), seq, i + 1, count, end);
        if (count > 1) return;
    }
}

} // namespace

NodeId follow_path(const LabeledGraph& g, NodeId v, std::span<const EdgeLabel> seq) {
    int count = 0;
    NodeId end = kBottom;
    count_walks(g, v, seq, 0, count, end);
    return count == 1 ? end : kBottom;
}

NodeId follow_path(const LabeledGraph& g, NodeId v, std::initializer_list<EdgeLabel> seq) {
    return follow_path(g, v, std::span<const EdgeLabel>(seq.begin(), seq.size()));
}

std::vector<int> bfs_dist(const LabeledGraph& g, std::span<const NodeId> sources) {
    std::vector<int> dist(g.num_nodes(), -1);
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (int e : g.incident(v)) {
            NodeId w = g.other(e, v);
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_dist(const LabeledGraph& g, NodeId source) {
    return bfs_dist(g, std::span<const NodeId>(&source, 1));
}

int distance(const LabeledGraph& g, NodeId u, NodeId v) {
    return bfs_dist(g, u)[v];
}

std::vector<std::vector<NodeId>> components(const LabeledGraph& g) {
    std::vector<std::vector<NodeId>> comps;
    std::vector<char> seen(g.num_nodes(), 0);
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::deque<NodeId> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            comps.back().push_back(v);
            for (int e : g.incident(v)) {
                NodeId w = g.other(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

DiameterEstimate estimate_diameter(const LabeledGraph& g, NodeId inside) {
    DiameterEstimate est;
    std::vector<int> d0 = bfs_dist(g, inside);
    NodeId a = inside;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (d0[v] > d0[a]) a = v;
    std::vector<int> da = bfs_dist(g, a);
    NodeId b = a;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (da[v] > da[b]) b = v;
    est.a = a;
    est.b = b;
    est.diameter = da[b];
    return est;
}

View make_view(const LabeledGraph& g, std::span<const NodeId> centers, int t) {
    View view;
    view.radius = t;
    std::vector<int> dist = bfs_dist(g, centers);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (dist[v] < 0 || dist[v] > t) continue;
        NodeId local = view.graph.add_node(g.label(v));
        view.graph.input(local) = g.input(v);
        view.to_orig.push_back(v);
        view.to_local[v] = local;
        view.depth.push_back(dist[v]);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        auto iu = view.to_local.find(ed.u);
        auto iv = view.to_local.find(ed.v);
        if (iu == view.to_local.end() || iv == view.to_local.end()) continue;
        // open subgraph: frontier-frontier edges are invisible to the view
        if (dist[ed.u] == t && dist[ed.v] == t) continue;
        view.graph.add_edge(iu->second, iv->second, ed.lu, ed.lv);
    }
    return view;
}

View make_view(const LabeledGraph& g, NodeId center, int t) {
    return make_view(g, std::span<const NodeId>(&center, 1), t);
}

LabeledGraph power_graph(const LabeledGraph& g, int k) {
    LabeledGraph p;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        NodeId w = p.add_node(g.label(v));
        p.input(w) = g.input(v);
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<int> dist = bfs_dist(g, v);
        for (NodeId w = v + 1; w < g.num_nodes(); ++w)
            if (dist[w] >= 1 && dist[w] <= k) p.add_edge(v, w);
    }
    return p;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const NodeId> keep,
                              std::vector<NodeId>* to_orig) {
    LabeledGraph sub;
    std::unordered_map<NodeId, NodeId> local;
    for (NodeId v : keep) {
        NodeId w = sub.add_node(g.label(v));
        sub.input(w) = g.input(v);
        local[v] = w;
        if (to_orig) to_orig->push_back(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        auto iu = local.find(ed.u);
        auto iv = local.find(ed.v);
        if (iu != local.end() && iv != local.end())
            sub.add_edge(iu->second, iv->second, ed.lu, ed.lv);
    }
    return sub;
}

void assign_idents(LabeledGraph& g, uint64_t seed, int c) {
    const uint64_t n = static_cast<uint64_t>(g.num_nodes());
    uint64_t space = 1;
    for (int i = 0; i < c; ++i) {
        if (space > ~0ull / std::max<uint64_t>(n, 1)) { space = ~0ull; break; }
        space *= std::max<uint64_t>(n, 1);
    }
    KeyedRng rng(seed, 0x1d5);
    std::set<uint64_t> used;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        uint64_t id;
        do { id = rng.uniform(std::max<uint64_t>(space, n)); } while (!used.insert(id).second);
        g.input(v).ident = id;
    }
}

} // namespace lcllab
