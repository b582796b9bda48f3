#ifndef CHAINGRID_GRIDS_HPP
#define CHAINGRID_GRIDS_HPP

#include "chaingrid/graph.hpp"

namespace chaingrid {

enum class GridFamily { X, Y, Z, ZSplit };

/// A graph together with (column,row) coordinates, column 1 leftmost and
/// row 1 the bottom row. Vertex index of (col i, row j), both 1-based,
/// is (i-1)*rows + (j-1); all generators use this layout.
struct GridGraph {
    Graph graph;
    GridFamily family = GridFamily::X;
    int cols = 0;
    int rows = 0;

    int vertex(int col, int row) const {
        if (col < 1 || col > cols || row < 1 || row > rows)
            throw input_error("GridGraph: coordinate out of range");
        return (col - 1) * rows + (row - 1);
    }
    int col_of(int v) const { return v / rows + 1; }
    int row_of(int v) const { return v % rows + 1; }

    /// Re-derives adjacency from coordinates via the family's edge rule
    /// and compares with the stored graph.
    bool coords_consistent() const;
};

/// Whether the family's edge rule joins (i,j) and (i2,j2); shared by the
/// generators and the round-trip check.
bool grid_rule(GridFamily family, int i, int j, int i2, int j2);

/// X-grid: cols columns, rows rows; consecutive columns form a chain
/// graph oriented so that x_{i,j} ~ x_{i+1,j'} iff j >= j'.
GridGraph x_grid(int cols, int rows);

/// Z-grid on n columns, k rows (edge rules (1)-(3)).
GridGraph z_grid(int n, int k);

/// Y-grid on n columns, k rows (edge rules (1)-(4)).
GridGraph y_grid(int n, int k);

/// Z-grid plus a clique on all even-column vertices (a split graph).
GridGraph zsplit_grid(int n, int k);

/// n-universal chain graph: parts a_1..a_n (vertices 0..n-1) and
/// b_1..b_n (vertices n..2n-1), edge a_i b_j iff i >= j.
Graph chain_universal(int n);
Bipartition chain_universal_parts(int n);

/// S_k: vertices x_1..x_k (indices 0..k-1) and y_1..y_k (indices
/// k..2k-1); x_i ~ y_j iff j == i or j >= i+2.
struct AntichainGraph {
    Graph graph;
    int k = 0;
    int x_vertex(int i) const { return i - 1; }       // 1-based i
    int y_vertex(int i) const { return k + i - 1; }
};

AntichainGraph s_graph(int k);

/// S_k with the 2-element antichain label poset: label 1 (white) on
/// x_1, y_1, x_k, y_k and label 0 (black) elsewhere.
LabelledGraph s_circ(int k);

/// T_k: S_k with the x-side completed into a clique (so T_k* = S_k).
Graph t_graph(int k);
LabelledGraph t_circ(int k);

enum class CrossDirection { Z_into_Y, Y_into_Z };

/// Explicit inter-embedding between the two bichain-universal grids:
///   Z_into_Y: z_grid(n,n) -> y_grid(2n,2n), image avoids row 1
///             (z_{i,j} -> y_{i,i+j});
///   Y_into_Z: y_grid(n,n) -> z_grid(2n,2n) along a descending diagonal
///             band, bottom-row vertices placed in row 1 (even column i
///             at z_{i,1}, odd column i at z_{i+2,1}).
/// The returned map is validated against the induced-embedding oracle;
/// a failure throws std::logic_error.
Embedding zy_cross_embedding(int n, CrossDirection direction);

}  // namespace chaingrid

#endif
