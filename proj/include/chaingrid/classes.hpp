#ifndef CHAINGRID_CLASSES_HPP
#define CHAINGRID_CLASSES_HPP

#include "chaingrid/graph.hpp"
#include "chaingrid/transforms.hpp"

#include <string>

namespace chaingrid {

/// The vertex quasi-order x <= y iff N(x) is contained in N(y) u {y}.
struct NeighbourhoodPreorder {
    std::vector<std::vector<bool>> leq;
    bool le(int x, int y) const { return leq[x][y]; }
};

NeighbourhoodPreorder neighbourhood_preorder(const Graph& g);

/// Size of a largest antichain of the neighbourhood quasi-order,
/// computed by Dilworth-style matching on the quotient poset.
int dilworth_number(const Graph& g);

/// Independent brute force over all vertex subsets (n <= 20).
int dilworth_number_brute_force(const Graph& g);

/// Outcome of a recognizer, carrying checkable evidence either way.
struct RecognitionReport {
    bool verdict = false;

    // Rejection evidence: an induced embedding of a forbidden graph.
    std::string forbidden_name;
    Graph forbidden;
    Embedding witness;

    // Acceptance evidence, populated per recognizer.
    std::optional<Bipartition> bipartition;
    // chains[part][c] = vertices of chain c in neighbourhood-inclusion
    // order (smallest neighbourhood first).
    std::vector<std::vector<std::vector<int>>> chains;
    std::optional<SplitPartition> split;
};

/// If the neighbourhoods of `part` are linearly ordered by inclusion,
/// returns them smallest-first; otherwise nullopt.
std::optional<std::vector<int>> is_chain_part(const Graph& g, const std::vector<int>& part);

/// Splits each part of B into at most k chains (k = 1 or 2). For k = 2
/// this 2-colours the incomparability graph of neighbourhood inclusion.
RecognitionReport is_k_chain(const Graph& g, const Bipartition& b, int k);

/// Forbidden-subgraph route: scans C3, C5, C7, P7, C6, 3K2 and returns
/// the first hit (the three named graphs plus the short odd cycles that
/// bipartiteness excludes).
std::optional<std::pair<std::string, Embedding>> bichain_forbidden_witness(const Graph& g);

/// Structural route: searches the component colour-swap choices for a
/// bipartition whose parts split into at most two chains each.
std::optional<RecognitionReport> bichain_chain_certificate(const Graph& g);

/// Full recognizer; the two routes above must agree (std::logic_error
/// otherwise).
RecognitionReport is_bichain(const Graph& g);

std::optional<std::pair<std::string, Embedding>> split_forbidden_witness(const Graph& g);
RecognitionReport is_split(const Graph& g);

std::optional<std::pair<std::string, Embedding>> split_permutation_forbidden_witness(
    const Graph& g);
RecognitionReport is_split_permutation(const Graph& g);

}  // namespace chaingrid

#endif
