// Command-line front door: generation, lifting, checking, detector and
// solver runs, statistics, and export. Exit codes: 0 success, 1 violations
// found, 2 invalid input.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lcllab/depsim.hpp"
#include "lcllab/detectors.hpp"
#include "lcllab/ghz.hpp"
#include "lcllab/graph_io.hpp"
#include "lcllab/local_sim.hpp"
#include "lcllab/promise.hpp"

using namespace lcllab;
using nlohmann::json;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitInvalid = 2;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

BipartiteInstance load_instance(const std::string& path) {
    return bipartite_from_json(read_json(path));
}

json violations_json(const std::vector<Violation>& vio) {
    json arr = json::array();
    for (const Violation& v : vio) arr.push_back({{"node", v.node}, {"rule", v.rule}});
    return arr;
}

std::vector<bool> input_marks(const LabeledGraph& g) {
    std::vector<bool> marks(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) marks[v] = g.input(v).mark;
    return marks;
}

// white degree delta, black degree 3, about n nodes in total
BipartiteInstance hard_instance(int delta, int n, uint64_t seed) {
    if (delta < 1 || n < 2) throw std::runtime_error("gen hard: need delta >= 1, n >= 2");
    int whites = std::max(1, (3 * n) / (3 + delta));
    while ((whites * delta) % 3 != 0) ++whites;
    int blacks = whites * delta / 3;
    KeyedRng rng(seed, 0x4a4d);
    std::vector<int> stubs;
    for (int w = 0; w < whites; ++w)
        for (int i = 0; i < delta; ++i) stubs.push_back(w);
    for (size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.uniform(i)]);
    BipartiteInstance b = BipartiteInstance::make(whites, blacks);
    for (size_t i = 0; i < stubs.size(); ++i)
        b.add_edge(stubs[i], static_cast<int>(i / 3));
    return b;
}

int run_check(const std::string& in, const std::string& problem, const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    std::vector<Violation> vio;
    if (problem == "tree") {
        vio = check_tree(g);
    } else if (problem == "octopus") {
        vio = check_octopus(g);
    } else if (problem == "proper") {
        vio = check_proper(g);
    } else {
        throw std::runtime_error("unknown problem: " + problem);
    }
    json report = {{"problem", problem}, {"violations", violations_json(vio)}};
    write_json(out_path, report);
    return vio.empty() ? 0 : kExitViolations;
}

int run_detect(const std::string& in, const std::string& problem, const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    std::vector<int> labels, radius;
    std::vector<Violation> checker;
    if (problem == "badtree") {
        BadTreeOutcome r = solve_badtree(g, input_marks(g));
        for (BadTreeLabel l : r.out) labels.push_back(static_cast<int>(l));
        radius = r.radius;
        checker = check_badtree(g, input_marks(g), r.out);
    } else if (problem == "badoctopus") {
        BadOctopusOutcome r = solve_badoctopus(g, input_marks(g));
        labels = r.out;
        radius = r.radius;
        checker = check_badoctopus(g, input_marks(g), r.out);
    } else if (problem == "badgraph") {
        BadGraphOutcome r = solve_badgraph(g);
        labels = r.out;
        radius = r.radius;
        checker = check_badgraph(g, r.out);
    } else {
        throw std::runtime_error("unknown problem: " + problem);
    }
    if (!checker.empty()) throw std::runtime_error("detector output failed its checker");
    int flagged = 0;
    for (int l : labels) flagged += l != 0;
    json report = {{"problem", problem},
                   {"labels", labels},
                   {"radius", radius},
                   {"flagged", flagged}};
    write_json(out_path, report);
    return flagged == 0 ? 0 : kExitViolations;
}

int run_pi(const std::string& in, uint64_t seed, const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    PiOutcome po = solve_pi(g, seed);
    std::vector<Violation> vio = check_pi(g, po.out);
    int errs = 0;
    for (int code : po.out) errs += !pi_is_promise(code);
    json report = {{"problem", "pi"},       {"seed", seed},
                   {"labels", po.out},      {"radius", po.radius},
                   {"compressed", po.compressed}, {"error_labels", errs},
                   {"violations", violations_json(vio)}};
    write_json(out_path, report);
    return vio.empty() ? (errs == 0 ? 0 : kExitViolations) : kExitViolations;
}

int run_quantum(const std::string& in, uint64_t seed, const std::string& out_path) {
    BipartiteInstance b = load_instance(in);
    QuantumRun run = quantum_solve_iterghz(b, seed);
    std::vector<Violation> vio = check_iterghz(b, run.edge_labels);
    json report = {{"problem", "quantum"},
                   {"seed", seed},
                   {"edge_labels", run.edge_labels},
                   {"white_rounds", run.white_rounds},
                   {"violations", violations_json(vio)}};
    write_json(out_path, report);
    return vio.empty() ? 0 : kExitViolations;
}

int run_depsim(const std::string& in, uint64_t seed, std::optional<double> eps,
               const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    PiOutcome ref = solve_pi(g, seed);
    int t = 1;
    for (int r : ref.radius) t = std::max(t, r);
    AlgorithmOutcome oc(t, [](const LabeledGraph& h, uint64_t s) { return solve_pi(h, s).out; });
    SimulateResult sr = simulate(oc, make_pi_problem(), g, seed, eps);
    json report = {{"problem", "depsim"},
                   {"seed", seed},
                   {"locality", t},
                   {"clusters", sr.clustering.clusters.size()},
                   {"leftover", sr.clustering.leftover.size()},
                   {"parts", sr.dpart.parts.size()},
                   {"solved", static_cast<bool>(sr.labeling)}};
    std::vector<Violation> vio;
    if (sr.labeling) {
        vio = check_pi(g, *sr.labeling);
        report["labels"] = *sr.labeling;
    }
    report["violations"] = violations_json(vio);
    write_json(out_path, report);
    return sr.labeling && vio.empty() ? 0 : kExitViolations;
}

// round-based execution: every node floods its component, then solves
int run_sync(const std::string& in, uint64_t seed, int max_rounds,
             const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    GatherProgram prog([seed](const GatherProgram::Ball& ball) -> std::optional<json> {
        if (!ball.stable) return std::nullopt;
        return json(solve_pi(ball.graph, seed).out[ball.center]);
    });
    RunTrace trace = run_sync(g, prog, seed, max_rounds);
    std::vector<int> labels;
    for (const json& o : trace.output) labels.push_back(o.get<int>());
    std::vector<Violation> vio = check_pi(g, labels);
    json report = {{"problem", "sync"},
                   {"seed", seed},
                   {"labels", labels},
                   {"rounds", trace.rounds},
                   {"radius", trace.radius},
                   {"total_rounds", trace.total_rounds},
                   {"violations", violations_json(vio)}};
    write_json(out_path, report);
    return vio.empty() ? 0 : kExitViolations;
}

int run_stats(const std::string& in, uint64_t seed, int trials, const std::string& out_path) {
    LabeledGraph g = load_graph(in);
    int successes = 0, max_radius = 0;
    std::map<int, int> histogram;
    for (int t = 0; t < trials; ++t) {
        PiOutcome po = solve_pi(g, seed + t);
        successes += check_pi(g, po.out).empty();
        for (int r : po.radius) {
            ++histogram[r];
            max_radius = std::max(max_radius, r);
        }
    }
    json hist = json::array();
    for (auto [r, count] : histogram) hist.push_back({r, count});
    json report = {{"nodes", g.num_nodes()},
                   {"trials", trials},
                   {"successes", successes},
                   {"max_radius", max_radius},
                   {"radius_histogram", hist}};
    write_json(out_path, report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcllab: locally checkable labeling laboratory"};
    app.require_subcommand(1);
    // --h is a gadget-height option, so the help flag is --help only
    app.set_help_flag("--help", "print help");

    std::string in, out, problem = "pi", kind;
    uint64_t seed = 0;
    int h = 2, degree = 3, whites = 8, max_degree = 6, delta = 3, n = 60;
    int trials = 10, max_rounds = 1000;
    std::optional<double> eps;

    CLI::App* gen = app.add_subcommand("gen", "generate a gadget or instance");
    gen->set_help_flag("--help", "print help");
    gen->add_option("kind", kind, "tree | octopus | instance | hard")->required();
    gen->add_option("--h", h, "gadget height");
    gen->add_option("--degree", degree, "octopus degree");
    gen->add_option("--whites", whites, "instance white count");
    gen->add_option("--max-degree", max_degree, "instance white degree bound");
    gen->add_option("--delta", delta, "hard-instance white degree");
    gen->add_option("--n", n, "hard-instance target size");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out, "output path");

    CLI::App* lift_cmd = app.add_subcommand("lift", "lift an instance to a gadget graph");
    lift_cmd->set_help_flag("--help", "print help");
    lift_cmd->add_option("--in", in, "instance JSON")->required();
    lift_cmd->add_option("--h", h, "port gadget height (0 = ceil(log2 n))");
    lift_cmd->add_option("--out", out, "output path");

    CLI::App* compress_cmd = app.add_subcommand("compress", "invert a lift");
    compress_cmd->set_help_flag("--help", "print help");
    compress_cmd->add_option("--in", in, "graph JSON")->required();
    compress_cmd->add_option("--out", out, "output path");

    CLI::App* check_cmd = app.add_subcommand("check", "check gadget structure");
    check_cmd->set_help_flag("--help", "print help");
    check_cmd->add_option("--in", in, "graph JSON")->required();
    check_cmd->add_option("--problem", problem, "tree | octopus | proper")->required();
    check_cmd->add_option("--out", out, "report path");

    CLI::App* detect_cmd = app.add_subcommand("detect", "run an error detector");
    detect_cmd->set_help_flag("--help", "print help");
    detect_cmd->add_option("--in", in, "graph JSON")->required();
    detect_cmd->add_option("--problem", problem, "badtree | badoctopus | badgraph")->required();
    detect_cmd->add_option("--out", out, "report path");

    CLI::App* run_cmd = app.add_subcommand("run", "run a solver");
    run_cmd->set_help_flag("--help", "print help");
    run_cmd->add_option("--in", in, "input path")->required();
    run_cmd->add_option("--problem", problem, "pi | quantum | depsim | sync");
    run_cmd->add_option("--seed", seed, "random seed");
    run_cmd->add_option("--eps", eps, "depsim leftover fraction");
    run_cmd->add_option("--max-rounds", max_rounds, "sync round limit");
    run_cmd->add_option("--out", out, "report path");

    CLI::App* stats_cmd = app.add_subcommand("stats", "locality and success statistics");
    stats_cmd->set_help_flag("--help", "print help");
    stats_cmd->add_option("--in", in, "graph JSON")->required();
    stats_cmd->add_option("--seed", seed, "base seed");
    stats_cmd->add_option("--trials", trials, "number of runs");
    stats_cmd->add_option("--out", out, "stats path");

    CLI::App* export_cmd = app.add_subcommand("export", "export a graph to Graphviz");
    export_cmd->set_help_flag("--help", "print help");
    export_cmd->add_option("--in", in, "graph JSON")->required();
    export_cmd->add_option("--out", out, "dot path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*gen) {
            if (kind == "tree") {
                write_json(out, graph_to_json(build_tree_gadget(h)));
            } else if (kind == "octopus") {
                write_json(out, graph_to_json(build_octopus(OctopusSpec::canonical(degree, h))));
            } else if (kind == "instance") {
                KeyedRng rng(seed, 0xb1);
                std::vector<int> wdeg(whites);
                int total = 0;
                for (int w = 0; w < whites; ++w) {
                    wdeg[w] = 1 + static_cast<int>(rng.uniform(max_degree));
                    total += wdeg[w];
                }
                while (total % 3 != 0) {
                    int w = static_cast<int>(rng.uniform(whites));
                    if (wdeg[w] < max_degree) { ++wdeg[w]; ++total; }
                }
                std::vector<int> stubs;
                for (int w = 0; w < whites; ++w)
                    for (int i = 0; i < wdeg[w]; ++i) stubs.push_back(w);
                for (size_t i = stubs.size(); i > 1; --i)
                    std::swap(stubs[i - 1], stubs[rng.uniform(i)]);
                BipartiteInstance b = BipartiteInstance::make(whites, total / 3);
                for (size_t i = 0; i < stubs.size(); ++i)
                    b.add_edge(stubs[i], static_cast<int>(i / 3));
                write_json(out, bipartite_to_json(b));
            } else if (kind == "hard") {
                write_json(out, bipartite_to_json(hard_instance(delta, n, seed)));
            } else {
                fprintf(stderr, "unknown kind: %s\n", kind.c_str());
                return kExitInvalid;
            }
            return 0;
        }
        if (*lift_cmd) {
            BipartiteInstance b = load_instance(in);
            int ph = h;
            if (ph <= 0) {
                int sz = std::max(2, b.num_whites + b.num_blacks);
                ph = static_cast<int>(std::ceil(std::log2(static_cast<double>(sz))));
            }
            write_json(out, graph_to_json(lift(b, ph).graph));
            return 0;
        }
        if (*compress_cmd) {
            std::optional<Compressed> c = compress(load_graph(in));
            if (!c) {
                fprintf(stderr, "input is not a compressible proper instance\n");
                return kExitViolations;
            }
            write_json(out, bipartite_to_json(c->instance));
            return 0;
        }
        if (*check_cmd) return run_check(in, problem, out);
        if (*detect_cmd) return run_detect(in, problem, out);
        if (*run_cmd) {
            if (problem == "pi") return run_pi(in, seed, out);
            if (problem == "quantum") return run_quantum(in, seed, out);
            if (problem == "depsim") return run_depsim(in, seed, eps, out);
            if (problem == "sync") return run_sync(in, seed, max_rounds, out);
            throw std::runtime_error("unknown problem: " + problem);
        }
        if (*stats_cmd) return run_stats(in, seed, trials, out);
        if (*export_cmd) {
            write_text(out, graph_to_dot(load_graph(in)));
            return 0;
        }
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitInvalid;
}
