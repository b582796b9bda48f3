#ifndef CHAINGRID_TRANSFORMS_HPP
#define CHAINGRID_TRANSFORMS_HPP

#include "chaingrid/graph.hpp"
#include "chaingrid/grids.hpp"

namespace chaingrid {

/// Schedule of pivoted edges; intermediates[i] is the graph after the
/// i-th pivot when retention is requested.
struct PivotTrace {
    std::vector<std::pair<int, int>> edges;
    std::vector<Graph> intermediates;
};

/// Clique + independent set covering V.
struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

/// Replace the subgraph induced on N(v) by its complement.
Graph local_complement(const Graph& g, int v);

/// Pivot on edge uv. Computed by three-set edge complementation; debug
/// builds cross-check against the triple local complementation.
Graph pivot(const Graph& g, int u, int v);

/// Complement the edges between N(u)∩N(v), N(u)\N(v)\{v} and
/// N(v)\N(u)\{u}.
Graph pivot_three_sets(const Graph& g, int u, int v);

/// G*u*v*u via local complementations, with the end-vertex interchange
/// that this composition performs undone so that it matches
/// pivot_three_sets vertex for vertex.
Graph pivot_via_local_complements(const Graph& g, int u, int v);

/// Starting from x_grid(2n,2n), pivot the bottom-row edges
/// x_{2n-1}x_{2n}, ..., x_1x_2 right to left; the result equals
/// y_grid(2n,2n) under the identity coordinate map.
std::pair<Graph, PivotTrace> pivot_x_to_y(int n, bool keep_intermediates = false);

bool split_partition_valid(const Graph& g, const SplitPartition& p);

/// Finds a split partition if one exists (degree-sequence method,
/// verified directly before returning).
std::optional<SplitPartition> find_split_partition(const Graph& g);

/// G* : delete all edges inside the clique, leaving a bipartite graph
/// with parts (C, I).
Graph split_bipartite_transform(const Graph& g, const SplitPartition& p);

/// Inverse: complete the chosen side of the bipartition into a clique.
enum class BipartiteSide { X, Y };
Graph bipartite_split_transform(const Graph& g, const Bipartition& b, BipartiteSide side);

// The seven minimal forbidden graphs of split graphs with Dilworth
// number at most two. The four split-specific ones are constructed from
// 3K2, C6 and P7 by completing one bipartition side into a clique.
Graph sun3_graph();          // from 3K2
Graph co_sun3_graph();       // from C6
Graph rising_sun_graph();    // from P7, completing the 4-vertex side
Graph co_rising_sun_graph(); // from P7, completing the 3-vertex side

}  // namespace chaingrid

#endif
