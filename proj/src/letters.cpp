#include "chaingrid/letters.hpp"

namespace chaingrid {

Graph decode_letter_graph(const LetterSystem& l) {
    const int m = static_cast<int>(l.word.size());
    for (int c : l.word)
        if (c < 1 || c > l.k) throw input_error("decode_letter_graph: symbol outside alphabet");
    for (auto [a, b] : l.s)
        if (a < 1 || a > l.k || b < 1 || b > l.k)
            throw input_error("decode_letter_graph: relation pair outside alphabet");
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (l.s.count({l.word[i], l.word[j]})) g.add_edge(i, j);
    return g;
}

LetterSystem z_letter_encoding(int n, int k) {
    if (n < 1 || k < 1) throw input_error("z_letter_encoding: n, k must be positive");
    LetterSystem l;
    l.k = n;
    for (int i = 1; 2 * i <= n; ++i) l.s.insert({2 * i - 1, 2 * i});        // R1
    for (int i = 1; 2 * i + 1 <= n; ++i) l.s.insert({2 * i + 1, 2 * i});    // R2
    for (int e = 2; e <= n; e += 2)                                          // D
        for (int o = e + 3; o <= n; o += 2) {
            l.s.insert({e, o});
            l.s.insert({o, e});
        }
    for (int b = 0; b < k; ++b)
        for (int c = n; c >= 1; --c) l.word.push_back(c);
    return l;
}

LetterSystem zsplit_letter_encoding(int n, int k) {
    LetterSystem l = z_letter_encoding(n, k);
    for (int a = 2; a <= n; a += 2)
        for (int b = 2; b <= n; b += 2) l.s.insert({a, b});
    return l;
}

}  // namespace chaingrid
