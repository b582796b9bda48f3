#ifndef CHAINGRID_DECOMPOSITION_HPP
#define CHAINGRID_DECOMPOSITION_HPP

#include "chaingrid/graph.hpp"
#include "chaingrid/transforms.hpp"

#include <memory>

namespace chaingrid {

enum class DecompOp { DisjointUnion, Join, SkewJoin };

/// A bipartite graph living inside a fixed universe 0..n-1; edges only
/// touch vertices listed in the parts.
struct PartedSubgraph {
    Graph graph;
    std::vector<int> part_x, part_y;
};

/// Binary composition. DisjointUnion keeps both edge sets as they are;
/// Join adds all X1*Y2 and X2*Y1 pairs; SkewJoin adds all X1*Y2 pairs
/// only (non-commutative).
PartedSubgraph compose(DecompOp op, const PartedSubgraph& g1, const PartedSubgraph& g2);

struct DecompositionTree {
    bool leaf = false;
    int vertex = -1;                // leaf payload
    DecompOp op = DecompOp::DisjointUnion;
    std::vector<int> part_x, part_y;  // vertices of this subtree
    std::unique_ptr<DecompositionTree> left, right;  // SkewJoin: left is (X1,Y1)

    // Indecomposable nodes on 2+ vertices have no children; their edges
    // are kept verbatim so recomposition stays exact.
    std::vector<std::pair<int, int>> prime_edges;
};

/// Rebuilds the subtree's graph inside a universe of `n` vertices by
/// composing bottom-up.
PartedSubgraph recompose(const DecompositionTree& tree, int n);

/// Recursive canonical decomposition. At each node the splits are tried
/// in the fixed order disjoint union, join, skew join; the left operand
/// is the component holding the smallest vertex (first two forms) or
/// the lexicographically least valid left set (skew join). Soft limit
/// 20 vertices for the skew-join scan.
std::unique_ptr<DecompositionTree> canonical_decompose(const Graph& g, const Bipartition& b);

/// True iff no split of the whole vertex set exists. Graphs on at most
/// one vertex count as prime.
bool is_canonically_prime(const Graph& g, const Bipartition& b);

/// Independent oracle: tests every 2-partition of V against the raw
/// defining edge conditions of the three operations (n <= 20).
bool is_canonically_prime_brute_force(const Graph& g, const Bipartition& b);

/// Split-graph side, via the clique-deletion transform: decomposes G*
/// over the (clique, independent) bipartition.
std::unique_ptr<DecompositionTree> split_canonical_decompose(const Graph& g,
                                                             const SplitPartition& p);
bool is_split_canonically_prime(const Graph& g, const SplitPartition& p);

}  // namespace chaingrid

#endif
