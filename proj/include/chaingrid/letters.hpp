#ifndef CHAINGRID_LETTERS_HPP
#define CHAINGRID_LETTERS_HPP

#include "chaingrid/graph.hpp"

#include <set>

namespace chaingrid {

/// Alphabet {1..k}, an ordered relation S over it, and a word.
struct LetterSystem {
    int k = 0;
    std::set<std::pair<int, int>> s;
    std::vector<int> word;
};

/// Vertices are word positions 0..|word|-1; positions i < j are
/// adjacent iff (word[i], word[j]) is in S. Diagonal pairs in S are
/// irrelevant (the graph stays simple).
Graph decode_letter_graph(const LetterSystem& l);

/// Letter system whose decode is isomorphic to z_grid(n,k): alphabet
/// {1..n} (one letter per column), word (n, n-1, ..., 1) repeated k
/// times, S built from the consecutive pairs (2i-1,2i), (2i+1,2i) and
/// the diagonal pairs between even letters and later odd letters.
/// Position (b-1)*n + t, carrying letter c = n+1-t, decodes to grid
/// vertex (column c, row k+1-b).
LetterSystem z_letter_encoding(int n, int k);

/// Same with all even-even letter pairs added, decoding to zsplit_grid.
LetterSystem zsplit_letter_encoding(int n, int k);

}  // namespace chaingrid

#endif
