#include "lcllab/detectors.hpp"

#include <algorithm>
#include <deque>

namespace lcllab {

const char* to_string(BadTreeLabel l) {
    switch (l) {
        case BadTreeLabel::Bottom: return "bot";
        case BadTreeLabel::Err: return "err";
        case BadTreeLabel::Up: return "up";
        case BadTreeLabel::Down: return "down";
        case BadTreeLabel::Left: return "left";
        case BadTreeLabel::Right: return "right";
    }
    return "?";
}

int detector_radius(int n) {
    int log = 0;
    while ((1 << log) < n + 1) ++log;  // ceil(log2(n+1))
    return 4 * log + 6;
}

// ---------------------------------------------------------------- badtree

bool badtree_witness(const LabeledGraph& g, const std::vector<bool>& marks, NodeId v) {
    return marks[v] || !check_tree_node(g, v).empty();
}

namespace {

std::vector<NodeId> ball(const LabeledGraph& g, NodeId v, int t) {
    std::vector<int> dist = bfs_dist(g, v);
    std::vector<NodeId> nodes;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (dist[u] >= 0 && dist[u] <= t) nodes.push_back(u);
    return nodes;
}

// single-step pointer targets; the step labels double as the pointer names
EdgeLabel step_label(BadTreeLabel l) {
    switch (l) {
        case BadTreeLabel::Up: return EdgeLabel::P;
        case BadTreeLabel::Down: return EdgeLabel::ChR;
        case BadTreeLabel::Left: return EdgeLabel::L;
        case BadTreeLabel::Right: return EdgeLabel::R;
        default: return EdgeLabel::None;
    }
}

// labels a pointer's target may carry (the phase discipline)
bool chain_ok(BadTreeLabel from, BadTreeLabel to) {
    switch (from) {
        case BadTreeLabel::Up:
            return to == BadTreeLabel::Up || to == BadTreeLabel::Left ||
                   to == BadTreeLabel::Right || to == BadTreeLabel::Err;
        case BadTreeLabel::Down:
            return to == BadTreeLabel::Down || to == BadTreeLabel::Left ||
                   to == BadTreeLabel::Right || to == BadTreeLabel::Err;
        case BadTreeLabel::Left:
            return to == BadTreeLabel::Left || to == BadTreeLabel::Err;
        case BadTreeLabel::Right:
            return to == BadTreeLabel::Right || to == BadTreeLabel::Err;
        default:
            return false;
    }
}

} // namespace

std::vector<Violation> check_badtree_node(const LabeledGraph& g, const std::vector<Tri>& marks,
                                          const std::vector<std::optional<BadTreeLabel>>& out,
                                          NodeId v) {
    std::vector<Violation> vio;
    if (!out[v]) return vio;
    BadTreeLabel l = *out[v];
    if (l == BadTreeLabel::Bottom) return vio;

    if (l == BadTreeLabel::Err) {
        // Err needs a mark or structural break within distance 2
        Tri allowed = Tri::False;
        for (NodeId u : ball(g, v, 2)) {
            Tri w = !check_tree_node(g, u).empty() ? Tri::True : marks[u];
            allowed = tri_or(allowed, w);
            if (allowed == Tri::True) break;
        }
        if (allowed == Tri::False) vio.push_back({v, "badtree.err"});
        return vio;
    }

    NodeId t = follow_path(g, v, {step_label(l)});
    if (t == kBottom) {
        vio.push_back({v, "badtree.ptr"});
        return vio;
    }
    if (out[t] && !chain_ok(l, *out[t])) vio.push_back({v, "badtree.chain"});
    return vio;
}

std::vector<Violation> check_badtree(const LabeledGraph& g, const std::vector<bool>& marks,
                                     const std::vector<BadTreeLabel>& out) {
    std::vector<Tri> tmarks(marks.size());
    for (size_t i = 0; i < marks.size(); ++i) tmarks[i] = marks[i] ? Tri::True : Tri::False;
    std::vector<std::optional<BadTreeLabel>> opt(out.begin(), out.end());
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_badtree_node(g, tmarks, opt, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

BadTreeOutcome solve_badtree(const LabeledGraph& g, const std::vector<bool>& marks) {
    const int n = g.num_nodes();
    const int cap = detector_radius(n);
    BadTreeOutcome result;
    result.out.assign(n, BadTreeLabel::Bottom);
    result.radius.assign(n, 0);

    // pointer targets and their reverse maps
    constexpr BadTreeLabel kPointers[4] = {BadTreeLabel::Right, BadTreeLabel::Left,
                                           BadTreeLabel::Up, BadTreeLabel::Down};
    std::array<std::vector<NodeId>, 4> tgt;
    std::array<std::vector<std::vector<NodeId>>, 4> rev;
    for (int p = 0; p < 4; ++p) {
        tgt[p].assign(n, kBottom);
        rev[p].assign(n, {});
        for (NodeId v = 0; v < n; ++v) {
            NodeId t = follow_path(g, v, {step_label(kPointers[p])});
            tgt[p][v] = t;
            if (t != kBottom) rev[p][t].push_back(v);
        }
    }
    // which pointer kinds may hang off a node with a given assigned label
    auto allowed_preds = [&](BadTreeLabel l) -> std::vector<int> {
        switch (l) {
            case BadTreeLabel::Err: return {0, 1, 2, 3};
            case BadTreeLabel::Right: return {0, 2, 3};
            case BadTreeLabel::Left: return {1, 2, 3};
            case BadTreeLabel::Up: return {2};
            case BadTreeLabel::Down: return {3};
            default: return {};
        }
    };

    for (const std::vector<NodeId>& comp : components(g)) {
        std::vector<NodeId> witnesses;
        for (NodeId v : comp)
            if (badtree_witness(g, marks, v)) witnesses.push_back(v);

        // the outputs are computed component-globally, so an honest per-node
        // radius is an upper bound on the eccentricity (capped at the
        // advertised visibility)
        std::vector<int> dc = bfs_dist(g, comp[0]);
        int ecc0 = 0;
        for (NodeId v : comp) ecc0 = std::max(ecc0, dc[v]);
        for (NodeId v : comp) result.radius[v] = std::min(cap, dc[v] + ecc0);

        if (witnesses.empty()) continue;  // clean component: all Bottom

        // everyone near a witness raises the error flag itself
        std::vector<int> wdist = bfs_dist(g, witnesses);
        std::deque<NodeId> queue;
        for (NodeId v : comp)
            if (wdist[v] >= 0 && wdist[v] <= 2) {
                result.out[v] = BadTreeLabel::Err;
                queue.push_back(v);
            }
        // grow pointer chains backwards from the error zone, preserving the
        // vertical-then-horizontal discipline; ties go to the smallest id
        while (!queue.empty()) {
            NodeId t = queue.front();
            queue.pop_front();
            for (int p : allowed_preds(result.out[t])) {
                for (NodeId u : rev[p][t]) {
                    if (result.out[u] != BadTreeLabel::Bottom) continue;
                    result.out[u] = kPointers[p];
                    queue.push_back(u);
                }
            }
        }
    }
    return result;
}

LclProblem make_badtree_problem(std::vector<bool> marks) {
    LclProblem p;
    p.name = "badtree";
    for (int l = 0; l < kNumBadTreeLabels; ++l)
        p.node_alphabet.push_back(to_string(static_cast<BadTreeLabel>(l)));
    p.half_edge_alphabet = {""};
    p.radius = 2;
    p.check = [marks](const LabeledGraph& g, const Labeling& lab, NodeId v) {
        std::vector<Tri> tmarks(g.num_nodes(), Tri::False);
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (marks[u]) tmarks[u] = Tri::True;
        std::vector<std::optional<BadTreeLabel>> out(g.num_nodes());
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (lab.node[u]) out[u] = static_cast<BadTreeLabel>(*lab.node[u]);
        return check_badtree_node(g, tmarks, out, v);
    };
    return p;
}

// ------------------------------------------------------------- badoctopus

int encode_triple(BadTreeLabel a, BadTreeLabel b, BadTreeLabel c) {
    return (static_cast<int>(a) * kNumBadTreeLabels + static_cast<int>(b)) *
               kNumBadTreeLabels +
           static_cast<int>(c);
}

std::array<BadTreeLabel, 3> decode_triple(int t) {
    return {static_cast<BadTreeLabel>(t / (kNumBadTreeLabels * kNumBadTreeLabels)),
            static_cast<BadTreeLabel>(t / kNumBadTreeLabels % kNumBadTreeLabels),
            static_cast<BadTreeLabel>(t % kNumBadTreeLabels)};
}

namespace {

// stage output of a node: nullopt = unassigned, otherwise the badtree label
std::optional<BadTreeLabel> stage_out(const std::vector<std::optional<BadOctopusLabel>>& out,
                                      NodeId u, int stage) {
    if (!out[u]) return std::nullopt;
    if (*out[u] == 0) return BadTreeLabel::Bottom;
    return decode_triple(*out[u] - 1)[stage];
}

// three-valued "did u's stage output end up non-Bottom"
Tri stage_errored(const std::vector<std::optional<BadOctopusLabel>>& out, NodeId u, int stage) {
    std::optional<BadTreeLabel> l = stage_out(out, u, stage);
    if (!l) return Tri::Unknown;
    return *l == BadTreeLabel::Bottom ? Tri::False : Tri::True;
}

} // namespace

std::vector<Violation> check_badoctopus_node(
    const LabeledGraph& g, const LabeledGraph& internal, const std::vector<Tri>& marks,
    const std::vector<std::optional<BadOctopusLabel>>& out, NodeId v) {
    std::vector<Violation> vio;
    if (!out[v] || *out[v] == 0) return vio;
    std::array<BadTreeLabel, 3> triple = decode_triple(*out[v] - 1);
    if (triple[0] == BadTreeLabel::Bottom && triple[1] == BadTreeLabel::Bottom &&
        triple[2] == BadTreeLabel::Bottom) {
        vio.push_back({v, "badoctopus.triple"});
        return vio;
    }

    const int n = g.num_nodes();
    auto i1 = [&](NodeId u) -> Tri {
        if (!check_octopus_node(g, internal, u).empty()) return Tri::True;
        return marks[u];
    };
    // propagation crosses every non-internal edge, so a link with a
    // relabeled half still carries the error to the far gadget
    auto link_errored = [&](NodeId u, NodeLabel who, int stage) -> Tri {
        if (g.label(u) != who) return Tri::False;
        Tri any = Tri::False;
        for (int e : g.incident(u)) {
            if (is_internal_edge(g, e)) continue;
            any = tri_or(any, stage_errored(out, g.other(e, u), stage));
        }
        return any;
    };
    auto i2 = [&](NodeId u) { return tri_or(i1(u), link_errored(u, NodeLabel::Head, 0)); };
    auto i3 = [&](NodeId u) { return tri_or(i2(u), link_errored(u, NodeLabel::Port, 1)); };

    static const char* kStageNames[3] = {"badoctopus.stage1.", "badoctopus.stage2.",
                                         "badoctopus.stage3."};
    for (int s = 0; s < 3; ++s) {
        std::vector<Tri> smarks(n, Tri::Unknown);
        for (NodeId u = 0; u < n; ++u)
            smarks[u] = s == 0 ? i1(u) : s == 1 ? i2(u) : i3(u);
        std::vector<std::optional<BadTreeLabel>> souts(n);
        for (NodeId u = 0; u < n; ++u) souts[u] = stage_out(out, u, s);
        for (const Violation& bv : check_badtree_node(internal, smarks, souts, v))
            vio.push_back({v, kStageNames[s] + bv.rule});
    }
    return vio;
}

std::vector<Violation> check_badoctopus(const LabeledGraph& g, const std::vector<bool>& marks,
                                        const std::vector<BadOctopusLabel>& out) {
    LabeledGraph internal = internal_subgraph(g);
    std::vector<Tri> tmarks(marks.size());
    for (size_t i = 0; i < marks.size(); ++i) tmarks[i] = marks[i] ? Tri::True : Tri::False;
    std::vector<std::optional<BadOctopusLabel>> opt(out.begin(), out.end());
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_badoctopus_node(g, internal, tmarks, opt, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

BadOctopusOutcome solve_badoctopus(const LabeledGraph& g, const std::vector<bool>& marks) {
    const int n = g.num_nodes();
    LabeledGraph internal = internal_subgraph(g);

    std::vector<bool> i1(n), i2(n), i3(n);
    for (NodeId v = 0; v < n; ++v)
        i1[v] = marks[v] || !check_octopus_node(g, internal, v).empty();
    BadTreeOutcome s1 = solve_badtree(internal, i1);

    auto link_errored = [&](NodeId u, NodeLabel who, const std::vector<BadTreeLabel>& prev) {
        if (g.label(u) != who) return false;
        for (int e : g.incident(u)) {
            if (is_internal_edge(g, e)) continue;
            if (prev[g.other(e, u)] != BadTreeLabel::Bottom) return true;
        }
        return false;
    };
    for (NodeId v = 0; v < n; ++v)
        i2[v] = i1[v] || link_errored(v, NodeLabel::Head, s1.out);
    BadTreeOutcome s2 = solve_badtree(internal, i2);
    for (NodeId v = 0; v < n; ++v)
        i3[v] = i2[v] || link_errored(v, NodeLabel::Port, s2.out);
    BadTreeOutcome s3 = solve_badtree(internal, i3);

    BadOctopusOutcome result;
    result.out.assign(n, 0);
    result.radius.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (s1.out[v] != BadTreeLabel::Bottom || s2.out[v] != BadTreeLabel::Bottom ||
            s3.out[v] != BadTreeLabel::Bottom)
            result.out[v] = 1 + encode_triple(s1.out[v], s2.out[v], s3.out[v]);
        result.radius[v] = s1.radius[v] + s2.radius[v] + s3.radius[v] + 2;
    }
    return result;
}

LclProblem make_badoctopus_problem(std::vector<bool> marks) {
    LclProblem p;
    p.name = "badoctopus";
    p.node_alphabet.push_back("bot");
    for (int t = 0; t < kNumBadOctopusLabels - 1; ++t) {
        std::array<BadTreeLabel, 3> tr = decode_triple(t);
        p.node_alphabet.push_back(std::string("err(") + to_string(tr[0]) + "," +
                                  to_string(tr[1]) + "," + to_string(tr[2]) + ")");
    }
    p.half_edge_alphabet = {""};
    p.radius = 4;
    p.check = [marks](const LabeledGraph& g, const Labeling& lab, NodeId v) {
        LabeledGraph internal = internal_subgraph(g);
        std::vector<Tri> tmarks(g.num_nodes(), Tri::False);
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (marks[u]) tmarks[u] = Tri::True;
        std::vector<std::optional<BadOctopusLabel>> out(g.num_nodes());
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (lab.node[u]) out[u] = *lab.node[u];
        return check_badoctopus_node(g, internal, tmarks, out, v);
    };
    return p;
}

long count_badoctopus_solutions(const LabeledGraph& g, const std::vector<bool>& marks,
                                uint64_t budget) {
    const int n = g.num_nodes();
    LabeledGraph internal = internal_subgraph(g);
    std::vector<bool> i1(n);
    for (NodeId v = 0; v < n; ++v)
        i1[v] = marks[v] || !check_octopus_node(g, internal, v).empty();

    auto link_errored = [&](NodeId u, NodeLabel who, const std::vector<BadTreeLabel>& prev) {
        if (g.label(u) != who) return false;
        for (int e : g.incident(u)) {
            if (is_internal_edge(g, e)) continue;
            if (prev[g.other(e, u)] != BadTreeLabel::Bottom) return true;
        }
        return false;
    };
    auto stage_labels = [&](const Labeling& lab) {
        std::vector<BadTreeLabel> out(n);
        for (NodeId v = 0; v < n; ++v) out[v] = static_cast<BadTreeLabel>(*lab.node[v]);
        return out;
    };

    long count = 0;
    enumerate_solutions(
        make_badtree_problem(i1), internal, Labeling::empty(internal),
        [&](const Labeling& l1) {
            std::vector<BadTreeLabel> s1 = stage_labels(l1);
            std::vector<bool> i2(n);
            for (NodeId v = 0; v < n; ++v)
                i2[v] = i1[v] || link_errored(v, NodeLabel::Head, s1);
            enumerate_solutions(
                make_badtree_problem(i2), internal, Labeling::empty(internal),
                [&](const Labeling& l2) {
                    std::vector<BadTreeLabel> s2 = stage_labels(l2);
                    std::vector<bool> i3(n);
                    for (NodeId v = 0; v < n; ++v)
                        i3[v] = i2[v] || link_errored(v, NodeLabel::Port, s2);
                    enumerate_solutions(
                        make_badtree_problem(i3), internal, Labeling::empty(internal),
                        [&](const Labeling& l3) {
                            std::vector<BadTreeLabel> s3 = stage_labels(l3);
                            std::vector<BadOctopusLabel> out(n, 0);
                            for (NodeId v = 0; v < n; ++v)
                                if (s1[v] != BadTreeLabel::Bottom ||
                                    s2[v] != BadTreeLabel::Bottom ||
                                    s3[v] != BadTreeLabel::Bottom)
                                    out[v] = 1 + encode_triple(s1[v], s2[v], s3[v]);
                            if (check_badoctopus(g, marks, out).empty()) ++count;
                            return true;
                        },
                        budget);
                    return true;
                },
                budget);
            return true;
        },
        budget);
    return count;
}

// -------------------------------------------------------------- badgraph

BadGraphContext make_badgraph_context(const LabeledGraph& g) {
    BadGraphContext ctx;
    ctx.proper = make_proper_context(g);
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.label(v) != NodeLabel::Inter) keep.push_back(v);
    ctx.intra_induced = induced_subgraph(g, keep, &ctx.intra_to_orig);
    ctx.intra_internal = internal_subgraph(ctx.intra_induced);
    ctx.orig_to_intra.assign(g.num_nodes(), kBottom);
    for (size_t i = 0; i < ctx.intra_to_orig.size(); ++i)
        ctx.orig_to_intra[ctx.intra_to_orig[i]] = static_cast<NodeId>(i);
    ctx.proper_violation.resize(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        ctx.proper_violation[v] = !check_proper_node(g, ctx.proper, v).empty();
    return ctx;
}

std::vector<Violation> check_badgraph_node(const LabeledGraph& g, const BadGraphContext& ctx,
                                           const std::vector<std::optional<BadGraphLabel>>& out,
                                           NodeId v) {
    std::vector<Violation> vio;
    if (!out[v] || *out[v] == kBgBottom) return vio;
    BadGraphLabel val = *out[v];
    bool inter = g.label(v) == NodeLabel::Inter;

    if (val == kBgErrInter1) {
        if (!inter || !ctx.proper_violation[v]) vio.push_back({v, "badgraph.inter1"});
        return vio;
    }
    if (val == kBgErrInter2) {
        if (!inter) {
            vio.push_back({v, "badgraph.inter2"});
            return vio;
        }
        for (int e : g.incident(v)) {
            std::optional<BadGraphLabel> nb = out[g.other(e, v)];
            if (nb && *nb == kBgBottom) {
                vio.push_back({v, "badgraph.inter2"});
                return vio;
            }
        }
        return vio;
    }

    // intra-octopus error
    if (inter) {
        vio.push_back({v, "badgraph.alphabet"});
        return vio;
    }
    const int ni = ctx.intra_induced.num_nodes();
    std::vector<Tri> marks(ni, Tri::Unknown);
    for (int i = 0; i < ni; ++i) {
        NodeId u = ctx.intra_to_orig[i];
        if (ctx.proper_violation[u]) {
            marks[i] = Tri::True;
            continue;
        }
        Tri near_e1 = Tri::False;
        for (int e : g.incident(u)) {
            std::optional<BadGraphLabel> nb = out[g.other(e, u)];
            if (!nb)
                near_e1 = tri_or(near_e1, Tri::Unknown);
            else if (*nb == kBgErrInter1)
                near_e1 = Tri::True;
        }
        marks[i] = near_e1;
    }
    std::vector<std::optional<BadOctopusLabel>> octo(ni);
    for (int i = 0; i < ni; ++i) {
        std::optional<BadGraphLabel> o = out[ctx.intra_to_orig[i]];
        if (!o) continue;
        octo[i] = *o >= kBgIntraBase ? *o - kBgIntraBase + 1 : 0;
    }
    for (const Violation& bv :
         check_badoctopus_node(ctx.intra_induced, ctx.intra_internal, marks, octo,
                               ctx.orig_to_intra[v]))
        vio.push_back({v, "badgraph." + bv.rule});
    return vio;
}

std::vector<Violation> check_badgraph(const LabeledGraph& g,
                                      const std::vector<BadGraphLabel>& out) {
    BadGraphContext ctx = make_badgraph_context(g);
    std::vector<std::optional<BadGraphLabel>> opt(out.begin(), out.end());
    std::vector<Violation> all;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::vector<Violation> vs = check_badgraph_node(g, ctx, opt, v);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    return all;
}

BadGraphOutcome solve_badgraph(const LabeledGraph& g) {
    BadGraphContext ctx = make_badgraph_context(g);
    const int n = g.num_nodes();
    BadGraphOutcome result;
    result.out.assign(n, kBgBottom);
    result.radius.assign(n, 1);

    for (NodeId v = 0; v < n; ++v)
        if (g.label(v) == NodeLabel::Inter && ctx.proper_violation[v])
            result.out[v] = kBgErrInter1;

    const int ni = ctx.intra_induced.num_nodes();
    std::vector<bool> marks(ni, false);
    for (int i = 0; i < ni; ++i) {
        NodeId u = ctx.intra_to_orig[i];
        marks[i] = ctx.proper_violation[u];
        for (int e : g.incident(u))
            if (result.out[g.other(e, u)] == kBgErrInter1) marks[i] = true;
    }
    BadOctopusOutcome bo = solve_badoctopus(ctx.intra_induced, marks);
    for (int i = 0; i < ni; ++i) {
        NodeId u = ctx.intra_to_orig[i];
        if (bo.out[i] != 0) result.out[u] = kBgIntraBase + bo.out[i] - 1;
        result.radius[u] = bo.radius[i] + 1;
    }
    for (NodeId v = 0; v < n; ++v) {
        if (g.label(v) != NodeLabel::Inter || result.out[v] == kBgErrInter1) continue;
        bool all_errored = g.degree(v) > 0;
        int r = 1;
        for (int e : g.incident(v)) {
            NodeId u = g.other(e, v);
            if (result.out[u] == kBgBottom) all_errored = false;
            r = std::max(r, result.radius[u] + 1);
        }
        if (all_errored) result.out[v] = kBgErrInter2;
        result.radius[v] = r;
    }
    return result;
}

LclProblem make_badgraph_problem() {
    LclProblem p;
    p.name = "badgraph";
    p.node_alphabet = {"bot", "err_inter_1", "err_inter_2"};
    for (int t = 0; t < kNumBadOctopusLabels - 1; ++t) {
        std::array<BadTreeLabel, 3> tr = decode_triple(t);
        p.node_alphabet.push_back(std::string("err_intra(") + to_string(tr[0]) + "," +
                                  to_string(tr[1]) + "," + to_string(tr[2]) + ")");
    }
    p.half_edge_alphabet = {""};
    p.radius = 5;
    p.check = [](const LabeledGraph& g, const Labeling& lab, NodeId v) {
        BadGraphContext ctx = make_badgraph_context(g);
        std::vector<std::optional<BadGraphLabel>> out(g.num_nodes());
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (lab.node[u]) out[u] = *lab.node[u];
        return check_badgraph_node(g, ctx, out, v);
    };
    return p;
}

} // namespace lcllab
