#ifndef CHAINGRID_WIDTH_HPP
#define CHAINGRID_WIDTH_HPP

#include "chaingrid/graph.hpp"

#include <memory>

namespace chaingrid {

/// GF(2) rank of the adjacency submatrix between A and V \ A.
int cutrank(const Graph& g, const std::vector<int>& a);
int cutrank_mask(const Graph& g, uint32_t a_mask);

/// Binary branch-decomposition witness: leaves are vertices, internal
/// nodes carry the subset they decompose.
struct RankDecomposition {
    uint32_t subset = 0;
    int width = 0;  // max cut-rank over this subtree's cuts
    std::unique_ptr<RankDecomposition> left, right;
};

struct RankWidthResult {
    int width = 0;
    std::unique_ptr<RankDecomposition> witness;
};

/// Exact rank-width by the 3^n subset DP
///   best({v}) = cutrank({v})
///   best(S)   = max(cutrank(S), min over bipartitions A|B of S of
///               max(best(A), best(B)))
/// Ceiling: default 14 vertices (capacity_error beyond).
RankWidthResult rank_width(const Graph& g, int max_vertices = 14);

/// k-expression term tree. Vertex creation records the concrete vertex
/// id, so evaluation rebuilds the target graph exactly.
struct CwExpr {
    enum class Kind { Create, Join, Relabel, Union };
    Kind kind = Kind::Create;
    int a = 0, b = 0;   // Join(a,b) / Relabel(a->b); labels are 1-based
    int vertex = -1;    // Create
    std::unique_ptr<CwExpr> left, right;  // Relabel/Join use left only

    static std::unique_ptr<CwExpr> create(int vertex, int label);
    static std::unique_ptr<CwExpr> join(int la, int lb, std::unique_ptr<CwExpr> sub);
    static std::unique_ptr<CwExpr> relabel(int from, int to, std::unique_ptr<CwExpr> sub);
    static std::unique_ptr<CwExpr> unite(std::unique_ptr<CwExpr> l, std::unique_ptr<CwExpr> r);
};

/// Evaluates the term over n vertices; labels[v] = final label (0 for
/// vertices the term never creates).
LabelledGraph evaluate_cw_expr(const CwExpr& expr, int n);

/// Largest label mentioned anywhere in the term.
int cw_expr_alphabet(const CwExpr& expr);

struct CliqueWidthResult {
    int width = 0;
    std::unique_ptr<CwExpr> witness;
};

/// Exact clique-width by iterative deepening on the alphabet size with
/// a reachable-state search (states are vertex subsets with a label
/// partition and the set of still-missing edges, kept saturated).
/// Ceiling: default 8 vertices.
CliqueWidthResult clique_width(const Graph& g, int max_vertices = 8, int max_k = 0);

/// A 3-label expression building chain_universal(n) (2 labels for n=1).
std::unique_ptr<CwExpr> chain_3expression(int n);

}  // namespace chaingrid

#endif
