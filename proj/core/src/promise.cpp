#include "lcllab/promise.hpp"

#include <algorithm>
#include <memory>

#include "lcllab/ghz.hpp"
#include "lcllab/rng.hpp"

namespace lcllab {

PromiseContext make_promise_context(const LabeledGraph& g) {
    PromiseContext ctx;
    ctx.proper = make_proper_context(g);
    ctx.lp = iterghz_as_linearizable();
    ctx.proper_violation.resize(g.num_nodes());
    std::vector<NodeId> bad;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        ctx.proper_violation[v] = !check_proper_node(g, ctx.proper, v).empty();
        if (ctx.proper_violation[v]) bad.push_back(v);
    }
    ctx.exempt.assign(g.num_nodes(), false);
    std::vector<int> dist = bfs_dist(g, bad);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        ctx.exempt[v] = dist[v] >= 0 && dist[v] <= kPromiseExemptRadius;
    return ctx;
}

namespace {

// -1 encodes an assigned Bottom; nullopt an unassigned slot
std::optional<int> sigma_at(const std::vector<std::optional<int>>& out, NodeId v) {
    if (v < 0 || v >= static_cast<NodeId>(out.size()) || !out[v]) return std::nullopt;
    return *out[v] - 1;
}

} // namespace

std::vector<Violation> check_promise_node(const LabeledGraph& g, const PromiseContext& ctx,
                                          const std::vector<std::optional<int>>& out, NodeId v) {
    std::vector<Violation> vio;
    auto bad = [&](const char* rule) { vio.push_back({v, rule}); };

    if (out[v] && (*out[v] < 0 || *out[v] >= kNumPromiseLabels)) bad("promise.alphabet");
    if (ctx.exempt[v]) return vio;

    bool port = g.label(v) == NodeLabel::Port;
    bool head = g.label(v) == NodeLabel::Head;
    bool inter = g.label(v) == NodeLabel::Inter;
    bool head_leaf =
        head && !g.has_half(v, EdgeLabel::ChL) && !g.has_half(v, EdgeLabel::ChR);

    // a word/black rule is definitely violated once any referenced node is
    // missing or assigned Bottom; it is left open while references are
    // unassigned
    auto rule = [&](const char* name, const std::vector<NodeId>& refs,
                    const std::function<bool(const std::vector<int>&)>& ok) {
        std::vector<int> sigmas;
        bool open = false;
        for (NodeId t : refs) {
            if (t == kBottom) {
                bad(name);
                return;
            }
            std::optional<int> s = sigma_at(out, t);
            if (s && *s < 0) {
                bad(name);
                return;
            }
            if (!s) open = true;
            else sigmas.push_back(*s);
        }
        if (!open && !ok(sigmas)) bad(name);
    };

    // 1, 2: exactly the port nodes carry a letter
    if (port && out[v] && *out[v] == kPromiseBottom) bad("promise.1");
    if (!port && out[v] && *out[v] != kPromiseBottom) bad("promise.2");

    // 3: a port gadget agrees on its letter
    if (port)
        for (int e : g.incident(v)) {
            NodeId u = g.other(e, v);
            if (g.label(u) != NodeLabel::Port) continue;
            if (out[v] && out[u] && *out[v] != *out[u]) {
                bad("promise.3");
                break;
            }
        }

    if (head_leaf) {
        EdgeLabel last_link = g.has_half(v, EdgeLabel::Hp2) ? EdgeLabel::Hp2 : EdgeLabel::Hp1;

        // 4: the word of a white starts in F at its left-most leaf's first port
        if (!g.has_half(v, EdgeLabel::L))
            rule("promise.4", {follow_path(g, v, {EdgeLabel::Hp1})},
                 [&](const std::vector<int>& s) { return ctx.lp.in_first(s[0]); });

        // 5: ... and ends in L at the right-most leaf's last port
        if (!g.has_half(v, EdgeLabel::R))
            rule("promise.5", {follow_path(g, v, {last_link})},
                 [&](const std::vector<int>& s) { return ctx.lp.in_last(s[0]); });

        // 6: consecutive ports of one leaf form a P pair
        if (g.has_half(v, EdgeLabel::Hp2))
            rule("promise.6",
                 {follow_path(g, v, {EdgeLabel::Hp1}), follow_path(g, v, {EdgeLabel::Hp2})},
                 [&](const std::vector<int>& s) { return ctx.lp.pair_ok(s[0], s[1]); });

        // 7: the last port of a leaf and the first port of its right
        // neighbor form a P pair
        if (g.has_half(v, EdgeLabel::R)) {
            NodeId u = follow_path(g, v, {EdgeLabel::R});
            bool u_leaf = u != kBottom && g.label(u) == NodeLabel::Head &&
                          !g.has_half(u, EdgeLabel::ChL) && !g.has_half(u, EdgeLabel::ChR);
            if (!u_leaf) {
                bad("promise.7");
            } else {
                rule("promise.7",
                     {follow_path(g, v, {last_link}), follow_path(g, u, {EdgeLabel::Hp1})},
                     [&](const std::vector<int>& s) { return ctx.lp.pair_ok(s[0], s[1]); });
            }
        }
    }

    // 8: a degree-3 inter node reads a B triple off its port gadgets
    if (inter && g.degree(v) == 3) {
        std::vector<NodeId> refs;
        for (int e : g.incident(v)) refs.push_back(g.other(e, v));
        rule("promise.8", refs, [&](const std::vector<int>& s) {
            return ctx.lp.black_ok({s[0], s[1], s[2]});
        });
    }
    return vio;
}

std::vector<Violation> check_promise(const LabeledGraph& g, const std::vector<int>& out) {
    PromiseContext ctx = make_promise_context(g);
    std::vector<std::optional<int>> opt(out.begin(), out.end());
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_promise_node(g, ctx, opt, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

std::vector<int> edge_labels_to_promise(const Lift& lifted, const std::vector<int>& edge_labels) {
    std::vector<int> out(lifted.graph.num_nodes(), kPromiseBottom);
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v)
        if (lifted.comp[v].kind == CompRef::EdgePort)
            out[v] = 1 + edge_labels[lifted.comp[v].index];
    return out;
}

std::optional<std::vector<int>> promise_to_edge_labels(const Lift& lifted, int num_edges,
                                                       const std::vector<int>& promise_out) {
    std::vector<int> labels(num_edges, -1);
    for (NodeId v = 0; v < lifted.graph.num_nodes(); ++v) {
        int code = promise_out[v];
        if (lifted.comp[v].kind != CompRef::EdgePort) {
            if (code != kPromiseBottom) return std::nullopt;
            continue;
        }
        if (code <= kPromiseBottom || code >= kNumPromiseLabels) return std::nullopt;
        int e = lifted.comp[v].index;
        if (labels[e] >= 0 && labels[e] != code - 1) return std::nullopt;
        labels[e] = code - 1;
    }
    for (int l : labels)
        if (l < 0) return std::nullopt;
    return labels;
}

// ------------------------------------------------------------------- Pi

std::vector<Violation> check_pi(const LabeledGraph& g, const std::vector<int>& out) {
    std::vector<Violation> all;
    std::vector<BadGraphLabel> bg(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) bg[v] = pi_bg(out[v]);
    std::vector<Violation> bv = check_badgraph(g, bg);
    all.insert(all.end(), bv.begin(), bv.end());

    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (pi_is_promise(out[v])) keep.push_back(v);
    std::vector<NodeId> to_orig;
    LabeledGraph gp = induced_subgraph(g, keep, &to_orig);
    PromiseContext ctx = make_promise_context(gp);
    std::vector<std::optional<int>> pout(gp.num_nodes());
    for (NodeId v = 0; v < gp.num_nodes(); ++v) pout[v] = out[to_orig[v]];
    for (NodeId v = 0; v < gp.num_nodes(); ++v)
        for (Violation& vi : check_promise_node(gp, ctx, pout, v))
            all.push_back({to_orig[v], vi.rule});
    return all;
}

namespace {

struct PiCache {
    const LabeledGraph* g = nullptr;
    int n = -1;
    BadGraphContext bgctx;
    PromiseContext pctx;
    std::vector<int> comp_of;
    std::vector<bool> comp_clean;
    std::vector<int> last_out;  // complete labeling the exact results are for
    std::vector<std::vector<Violation>> last_vio;

    void refresh(const LabeledGraph& graph) {
        if (g == &graph && n == graph.num_nodes()) return;
        g = &graph;
        n = graph.num_nodes();
        bgctx = make_badgraph_context(graph);
        pctx = make_promise_context(graph);
        comp_of.assign(n, -1);
        std::vector<std::vector<NodeId>> comps = components(graph);
        comp_clean.assign(comps.size(), true);
        for (size_t c = 0; c < comps.size(); ++c)
            for (NodeId v : comps[c]) {
                comp_of[v] = static_cast<int>(c);
                if (pctx.proper_violation[v]) comp_clean[c] = false;
            }
        last_out.clear();
        last_vio.clear();
    }
};

} // namespace

LclProblem make_pi_problem() {
    LclProblem p;
    p.name = "pi";
    p.radius = 5;
    p.node_alphabet.push_back("bottom");
    for (int l = 0; l < kNumGhzLabels; ++l)
        p.node_alphabet.push_back(std::string("sigma:") + ghz_label_name(l));
    for (int bg = 1; bg < kNumBadGraphLabels; ++bg)
        p.node_alphabet.push_back("bg:" + std::to_string(bg));
    p.half_edge_alphabet = {"-"};
    auto cache = std::make_shared<PiCache>();
    p.check = [cache](const LabeledGraph& g, const Labeling& lab, NodeId v) {
        cache->refresh(g);
        bool complete = true;
        for (const std::optional<int>& o : lab.node)
            if (!o) {
                complete = false;
                break;
            }
        if (complete) {
            // exact evaluation, cached per labeling
            std::vector<int> out(cache->n);
            for (NodeId u = 0; u < cache->n; ++u) out[u] = *lab.node[u];
            if (out != cache->last_out) {
                cache->last_out = out;
                cache->last_vio.assign(cache->n, {});
                for (Violation& vi : check_pi(g, out)) cache->last_vio[vi.node].push_back(vi);
            }
            return cache->last_vio[v];
        }

        std::vector<Violation> vio;
        std::vector<std::optional<BadGraphLabel>> bgout(cache->n);
        for (NodeId u = 0; u < cache->n; ++u)
            if (lab.node[u]) bgout[u] = pi_bg(*lab.node[u]);
        for (Violation& vi : check_badgraph_node(g, cache->bgctx, bgout, v))
            vio.push_back(vi);

        // On a component with no input defects the only valid completions
        // keep every node on the promise side with no exemptions, so the
        // promise rules prune eagerly there.
        if (cache->comp_clean[cache->comp_of[v]]) {
            if (lab.node[v] && !pi_is_promise(*lab.node[v])) vio.push_back({v, "pi.clean"});
            std::vector<std::optional<int>> pout(cache->n);
            for (NodeId u = 0; u < cache->n; ++u)
                if (lab.node[u] && pi_is_promise(*lab.node[u])) pout[u] = *lab.node[u];
            for (Violation& vi : check_promise_node(g, cache->pctx, pout, v))
                vio.push_back(vi);
        }
        return vio;
    };
    return p;
}

PiOutcome solve_pi(const LabeledGraph& g, uint64_t seed) {
    BadGraphOutcome bg = solve_badgraph(g);
    PiOutcome res;
    res.out.assign(g.num_nodes(), kPromiseBottom);
    res.radius = bg.radius;

    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (bg.out[v] == kBgBottom) keep.push_back(v);
        else res.out[v] = pi_from_bg(bg.out[v]);
    }
    std::vector<NodeId> to_orig;
    LabeledGraph gp = induced_subgraph(g, keep, &to_orig);
    std::optional<Compressed> comp = compress(gp);
    if (!comp) return res;
    res.compressed = true;

    QuantumRun run = quantum_solve_iterghz(comp->instance, mix64(seed ^ 0x70690000));
    for (NodeId v = 0; v < gp.num_nodes(); ++v)
        if (comp->comp[v].kind == CompRef::EdgePort)
            res.out[to_orig[v]] = 1 + run.edge_labels[comp->comp[v].index];

    // Radius accounting for the quantum part: a port node's letter depends
    // on its whole octopus and, through luck detection at its inter nodes,
    // on the neighboring octopi.
    ProperContext pc = make_proper_context(gp);
    std::vector<std::vector<NodeId>> octs = components(pc.intra);
    std::vector<int> oct_of(gp.num_nodes(), -1);
    std::vector<int> diam(octs.size(), 0);
    for (size_t c = 0; c < octs.size(); ++c) {
        if (gp.label(octs[c][0]) == NodeLabel::Inter) continue;
        for (NodeId v : octs[c]) oct_of[v] = static_cast<int>(c);
        diam[c] = estimate_diameter(pc.intra, octs[c][0]).diameter;
    }
    std::vector<int> adj_max(octs.size(), 0);
    for (NodeId v = 0; v < gp.num_nodes(); ++v) {
        if (gp.label(v) != NodeLabel::Inter) continue;
        int dmax = 0;
        for (int e : gp.incident(v)) {
            int c = oct_of[gp.other(e, v)];
            if (c >= 0) dmax = std::max(dmax, diam[c]);
        }
        for (int e : gp.incident(v)) {
            int c = oct_of[gp.other(e, v)];
            if (c >= 0) adj_max[c] = std::max(adj_max[c], dmax);
        }
    }
    for (NodeId v = 0; v < gp.num_nodes(); ++v) {
        if (comp->comp[v].kind != CompRef::EdgePort) continue;
        int c = oct_of[v];
        res.radius[to_orig[v]] += diam[c] + adj_max[c] + 4;
    }
    return res;
}

} // namespace lcllab
