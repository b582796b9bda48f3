#ifndef CHAINGRID_IO_HPP
#define CHAINGRID_IO_HPP

#include "chaingrid/decomposition.hpp"
#include "chaingrid/graph.hpp"
#include "chaingrid/grids.hpp"
#include "chaingrid/letters.hpp"
#include "chaingrid/width.hpp"

#include <json.hpp>

namespace chaingrid {

/// A graph plus the optional payloads the JSON schema carries:
/// {"n": int, "edges": [[u,v],...]} with optional "parts" ({"x","y"}),
/// "labels" (one int per vertex) and "coords" ([[col,row],...]).
struct GraphDocument {
    Graph graph;
    std::optional<Bipartition> parts;
    std::optional<std::vector<int>> labels;
    std::optional<std::vector<std::pair<int, int>>> coords;
};

nlohmann::json graph_to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const nlohmann::json& j);

GraphDocument document_from_grid(const GridGraph& grid);

/// DOT text; vertices are labelled "c{col}r{row}" when coords exist.
std::string graph_to_dot(const GraphDocument& doc);

/// LetterSystem JSON: {"k": int, "S": [[a,b],...], "word": [int,...]}.
nlohmann::json letter_system_to_json(const LetterSystem& l);
LetterSystem letter_system_from_json(const nlohmann::json& j);

/// Tree JSON: internal nodes {"op": "+"|"x"|"/", "children": [..,..]},
/// leaves plain vertex ids, indecomposable multi-vertex nodes
/// {"op": "prime", "x": [...], "y": [...], "edges": [[u,v],...]}.
nlohmann::json decomposition_to_json(const DecompositionTree& tree);

/// Term tree as nested arrays: ["create", vertex, label],
/// ["join", a, b, sub], ["relabel", from, to, sub], ["union", l, r].
nlohmann::json cw_expr_to_json(const CwExpr& expr);

GraphDocument read_graph_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace chaingrid

#endif
