#include "chaingrid/io.hpp"

#include <fstream>
#include <sstream>

namespace chaingrid {

using nlohmann::json;

nlohmann::json graph_to_json(const GraphDocument& doc) {
    json j;
    j["n"] = doc.graph.order();
    j["edges"] = json::array();
    for (auto [u, v] : doc.graph.edges()) j["edges"].push_back({u, v});
    if (doc.parts) {
        j["parts"] = {{"x", doc.parts->part_x}, {"y", doc.parts->part_y}};
    }
    if (doc.labels) j["labels"] = *doc.labels;
    if (doc.coords) {
        j["coords"] = json::array();
        for (auto [c, r] : *doc.coords) j["coords"].push_back({c, r});
    }
    return j;
}

GraphDocument graph_from_json(const nlohmann::json& j) {
    GraphDocument doc;
    try {
        int n = j.at("n").get<int>();
        doc.graph = Graph(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw input_error("graph_from_json: malformed edge");
            doc.graph.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        if (j.contains("parts")) {
            Bipartition b;
            b.part_x = j["parts"].at("x").get<std::vector<int>>();
            b.part_y = j["parts"].at("y").get<std::vector<int>>();
            doc.parts = b;
        }
        if (j.contains("labels")) {
            doc.labels = j["labels"].get<std::vector<int>>();
            if (static_cast<int>(doc.labels->size()) != n)
                throw input_error("graph_from_json: labels size mismatch");
        }
        if (j.contains("coords")) {
            std::vector<std::pair<int, int>> coords;
            for (const auto& c : j["coords"]) {
                if (!c.is_array() || c.size() != 2)
                    throw input_error("graph_from_json: malformed coordinate");
                coords.emplace_back(c[0].get<int>(), c[1].get<int>());
            }
            if (static_cast<int>(coords.size()) != n)
                throw input_error("graph_from_json: coords size mismatch");
            doc.coords = std::move(coords);
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("graph_from_json: ") + e.what());
    }
    return doc;
}

GraphDocument document_from_grid(const GridGraph& grid) {
    GraphDocument doc;
    doc.graph = grid.graph;
    std::vector<std::pair<int, int>> coords;
    for (int v = 0; v < grid.graph.order(); ++v)
        coords.emplace_back(grid.col_of(v), grid.row_of(v));
    doc.coords = std::move(coords);
    return doc;
}

std::string graph_to_dot(const GraphDocument& doc) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < doc.graph.order(); ++v) {
        out << "  v" << v;
        if (doc.coords)
            out << " [label=\"c" << (*doc.coords)[v].first << "r" << (*doc.coords)[v].second
                << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : doc.graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json letter_system_to_json(const LetterSystem& l) {
    json j;
    j["k"] = l.k;
    j["S"] = json::array();
    for (auto [a, b] : l.s) j["S"].push_back({a, b});
    j["word"] = l.word;
    return j;
}

LetterSystem letter_system_from_json(const nlohmann::json& j) {
    LetterSystem l;
    try {
        l.k = j.at("k").get<int>();
        for (const auto& p : j.at("S")) {
            if (!p.is_array() || p.size() != 2)
                throw input_error("letter_system_from_json: malformed pair");
            l.s.insert({p[0].get<int>(), p[1].get<int>()});
        }
        l.word = j.at("word").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw input_error(std::string("letter_system_from_json: ") + e.what());
    }
    return l;
}

nlohmann::json decomposition_to_json(const DecompositionTree& tree) {
    if (tree.leaf) return tree.vertex;
    if (!tree.left) {
        json j;
        j["op"] = "prime";
        j["x"] = tree.part_x;
        j["y"] = tree.part_y;
        j["edges"] = json::array();
        for (auto [u, v] : tree.prime_edges) j["edges"].push_back({u, v});
        return j;
    }
    json j;
    switch (tree.op) {
        case DecompOp::DisjointUnion: j["op"] = "+"; break;
        case DecompOp::Join: j["op"] = "x"; break;
        case DecompOp::SkewJoin: j["op"] = "/"; break;
    }
    j["children"] = {decomposition_to_json(*tree.left), decomposition_to_json(*tree.right)};
    return j;
}

nlohmann::json cw_expr_to_json(const CwExpr& expr) {
    switch (expr.kind) {
        case CwExpr::Kind::Create:
            return json::array({"create", expr.vertex, expr.a});
        case CwExpr::Kind::Join:
            return json::array({"join", expr.a, expr.b, cw_expr_to_json(*expr.left)});
        case CwExpr::Kind::Relabel:
            return json::array({"relabel", expr.a, expr.b, cw_expr_to_json(*expr.left)});
        case CwExpr::Kind::Union:
            return json::array(
                {"union", cw_expr_to_json(*expr.left), cw_expr_to_json(*expr.right)});
    }
    throw input_error("cw_expr_to_json: unknown node kind");
}

GraphDocument read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("read_graph_file: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("read_graph_file: ") + e.what());
    }
    return graph_from_json(j);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("write_json_file: cannot open " + path);
    out << j.dump(2) << "\n";
}

}  // namespace chaingrid
