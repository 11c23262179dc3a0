#include "lcllab/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcllab {

using nlohmann::json;

json graph_to_json(const LabeledGraph& g) {
    json j;
    j["n"] = g.num_nodes();
    j["nodes"] = json::array();
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        json node;
        node["id"] = v;
        node["label"] = to_string(g.label(v));
        node["input"] = {{"ident", g.input(v).ident}, {"mark", g.input(v).mark ? 1 : 0}};
        j["nodes"].push_back(node);
    }
    j["edges"] = json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        j["edges"].push_back({{"u", ed.u},
                              {"v", ed.v},
                              {"lu", to_string(ed.lu)},
                              {"lv", to_string(ed.lv)}});
    }
    return j;
}

LabeledGraph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    LabeledGraph g(n);
    if (j.contains("nodes")) {
        for (const json& node : j.at("nodes")) {
            NodeId v = node.at("id").get<NodeId>();
            if (v < 0 || v >= n) throw std::invalid_argument("node id out of range");
            if (node.contains("label"))
                g.set_label(v, node_label_from_string(node.at("label").get<std::string>()));
            if (node.contains("input")) {
                const json& in = node.at("input");
                if (in.contains("ident")) g.input(v).ident = in.at("ident").get<uint64_t>();
                if (in.contains("mark")) g.input(v).mark = in.at("mark").get<int>() != 0;
            }
        }
    }
    if (j.contains("edges")) {
        for (const json& edge : j.at("edges")) {
            NodeId u = edge.at("u").get<NodeId>();
            NodeId v = edge.at("v").get<NodeId>();
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            EdgeLabel lu = EdgeLabel::None, lv = EdgeLabel::None;
            if (edge.contains("lu")) lu = edge_label_from_string(edge.at("lu").get<std::string>());
            if (edge.contains("lv")) lv = edge_label_from_string(edge.at("lv").get<std::string>());
            g.add_edge(u, v, lu, lv);
        }
    }
    return g;
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return graph_from_json(j);
}

void save_graph(const LabeledGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

std::string graph_to_dot(const LabeledGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        out << "  n" << v << " [label=\"" << v;
        if (g.label(v) != NodeLabel::None) out << "\\n" << to_string(g.label(v));
        if (g.input(v).mark) out << "\\nmark";
        out << "\"];\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << "  n" << ed.u << " -- n" << ed.v;
        out << " [taillabel=\"" << (ed.lu == EdgeLabel::None ? "" : to_string(ed.lu))
            << "\", headlabel=\"" << (ed.lv == EdgeLabel::None ? "" : to_string(ed.lv))
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace lcllab
