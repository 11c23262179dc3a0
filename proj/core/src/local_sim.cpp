#include "lcllab/local_sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcllab {

using nlohmann::json;

KeyedRng node_rng(uint64_t seed, uint64_t node_key, int round) {
    return KeyedRng(seed, 0x6e6f6465, node_key, static_cast<uint64_t>(round + 1));
}

RunTrace run_sync(const LabeledGraph& g, const NodeProgram& prog, uint64_t seed,
                  int max_rounds) {
    const int n = g.num_nodes();
    // port position of each edge at both endpoints
    std::vector<std::array<int, 2>> pos(g.num_edges(), {-1, -1});
    for (NodeId v = 0; v < n; ++v)
        for (size_t i = 0; i < g.incident(v).size(); ++i) {
            int e = g.incident(v)[i];
            pos[e][g.edge(e).u == v ? 0 : 1] = static_cast<int>(i);
        }

    std::vector<LocalInfo> info(n);
    std::vector<json> state(n);
    for (NodeId v = 0; v < n; ++v) {
        info[v].node = v;
        info[v].label = g.label(v);
        info[v].input = g.input(v);
        for (int e : g.incident(v)) info[v].ports.push_back(g.side(e, v));
        KeyedRng rng = node_rng(seed, g.input(v).ident, -1);
        state[v] = prog.init(info[v], rng);
    }

    RunTrace trace;
    trace.output.resize(n);
    trace.rounds.assign(n, 0);
    trace.radius.assign(n, 0);
    std::vector<bool> decided(n, false);
    std::vector<int> taint(n, 0);
    std::vector<std::vector<json>> inbox(n);
    for (NodeId v = 0; v < n; ++v) inbox[v].resize(g.degree(v));

    int undecided = n;
    for (int round = 0; undecided > 0; ++round) {
        if (round > max_rounds) throw std::runtime_error("run_sync: max_rounds exceeded");
        std::vector<std::vector<json>> next(n);
        for (NodeId v = 0; v < n; ++v) next[v].resize(g.degree(v));
        std::vector<int> taint_prev = taint;

        for (NodeId v = 0; v < n; ++v) {
            if (decided[v]) continue;
            for (size_t i = 0; i < inbox[v].size(); ++i) {
                if (inbox[v][i].is_null()) continue;
                NodeId u = g.other(g.incident(v)[i], v);
                taint[v] = std::max(taint[v], 1 + taint_prev[u]);
            }
            std::vector<json> outbox(g.degree(v));
            std::optional<json> out;
            KeyedRng rng = node_rng(seed, g.input(v).ident, round);
            state[v] = prog.step(info[v], std::move(state[v]), inbox[v], outbox, out, rng);
            for (size_t i = 0; i < outbox.size(); ++i) {
                if (outbox[i].is_null()) continue;
                int e = g.incident(v)[i];
                NodeId u = g.other(e, v);
                next[u][pos[e][g.edge(e).u == u ? 0 : 1]] = std::move(outbox[i]);
            }
            if (out) {
                decided[v] = true;
                trace.output[v] = std::move(*out);
                trace.rounds[v] = round;
                trace.radius[v] = taint[v];
                --undecided;
            }
        }
        inbox = std::move(next);
        trace.total_rounds = round + 1;
    }
    return trace;
}

RunTrace run_as_view_function(const LabeledGraph& g,
                              const std::function<int(const LabeledGraph&, NodeId)>& radius_fn,
                              const std::function<json(const View&, uint64_t)>& output_fn,
                              uint64_t seed) {
    RunTrace trace;
    trace.output.resize(g.num_nodes());
    trace.rounds.assign(g.num_nodes(), 0);
    trace.radius.assign(g.num_nodes(), 0);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        int t = radius_fn(g, v);
        View view = make_view(g, v, t);
        trace.output[v] = output_fn(view, seed);
        trace.rounds[v] = t;
        trace.radius[v] = t;
        trace.total_rounds = std::max(trace.total_rounds, t);
    }
    return trace;
}

// ---------------------------------------------------------------- gather

namespace {

std::string ident_key(uint64_t ident) { return std::to_string(ident); }

json record_of(const LocalInfo& info) {
    json r;
    r["label"] = to_string(info.label);
    r["mark"] = info.input.mark;
    r["ports"] = json::array();
    for (EdgeLabel l : info.ports) r["ports"].push_back(to_string(l));
    return r;
}

GatherProgram::Ball reconstruct(const json& state, uint64_t center_ident) {
    GatherProgram::Ball ball;
    std::vector<uint64_t> idents;
    for (const auto& [key, rec] : state.at("records").items())
        idents.push_back(std::stoull(key));
    std::sort(idents.begin(), idents.end());
    std::unordered_map<uint64_t, NodeId> local;
    for (uint64_t id : idents) {
        const json& rec = state.at("records").at(ident_key(id));
        NodeId v = ball.graph.add_node(node_label_from_string(rec.at("label")));
        ball.graph.input(v).ident = id;
        ball.graph.input(v).mark = rec.at("mark").get<bool>();
        local[id] = v;
    }
    ball.center = local.at(center_ident);

    struct Link {
        uint64_t a, b;
        int ap, bp;
    };
    std::vector<Link> links;
    for (const auto& [key, to] : state.at("links").items()) {
        size_t hash = key.find('#');
        Link l;
        l.a = std::stoull(key.substr(0, hash));
        l.ap = std::stoi(key.substr(hash + 1));
        l.b = to.at("to").get<uint64_t>();
        l.bp = to.at("tp").get<int>();
        if (l.a > l.b) continue;  // the symmetric link adds the edge
        if (!local.count(l.a) || !local.count(l.b)) continue;
        links.push_back(l);
    }
    std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
        return std::tie(x.a, x.ap) < std::tie(y.a, y.ap);
    });
    for (const Link& l : links) {
        const json& ra = state.at("records").at(ident_key(l.a));
        const json& rb = state.at("records").at(ident_key(l.b));
        ball.graph.add_edge(local[l.a], local[l.b],
                            edge_label_from_string(ra.at("ports")[l.ap]),
                            edge_label_from_string(rb.at("ports")[l.bp]));
    }
    return ball;
}

} // namespace

json GatherProgram::init(const LocalInfo& info, KeyedRng&) const {
    json state;
    state["records"][ident_key(info.input.ident)] = record_of(info);
    state["links"] = json::object();
    state["round"] = -1;
    return state;
}

json GatherProgram::step(const LocalInfo& info, json state, const std::vector<json>& inbox,
                         std::vector<json>& outbox, std::optional<json>& out,
                         KeyedRng&) const {
    int round = state.at("round").get<int>() + 1;
    state["round"] = round;
    size_t before = state["records"].size() + state["links"].size();
    std::string me = ident_key(info.input.ident);

    for (size_t i = 0; i < inbox.size(); ++i) {
        const json& msg = inbox[i];
        if (msg.is_null()) continue;
        for (const auto& [key, rec] : msg.at("records").items())
            if (!state["records"].contains(key)) state["records"][key] = rec;
        for (const auto& [key, to] : msg.at("links").items())
            if (!state["links"].contains(key)) state["links"][key] = to;
        // the carrying edge itself, both directions
        std::string from = msg.at("from").get<std::string>();
        int fp = msg.at("fp").get<int>();
        std::string k1 = from + "#" + std::to_string(fp);
        std::string k2 = me + "#" + std::to_string(i);
        if (!state["links"].contains(k1))
            state["links"][k1] = {{"to", info.input.ident}, {"tp", static_cast<int>(i)}};
        if (!state["links"].contains(k2))
            state["links"][k2] = {{"to", std::stoull(from)}, {"tp", fp}};
    }

    Ball ball = reconstruct(state, info.input.ident);
    ball.rounds = round;
    ball.stable = round >= 1 && state["records"].size() + state["links"].size() == before;
    if (std::optional<json> decision = decide_(ball)) out = std::move(*decision);

    json msg;
    msg["from"] = me;
    msg["records"] = state["records"];
    msg["links"] = state["links"];
    for (size_t i = 0; i < outbox.size(); ++i) {
        outbox[i] = msg;
        outbox[i]["fp"] = static_cast<int>(i);
    }
    return state;
}

} // namespace lcllab
