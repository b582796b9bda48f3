#include "chaingrid/transforms.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace chaingrid {

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw input_error("local_complement: vertex out of range");
    Graph out = g;
    std::vector<int> nb = g.neighbours(v);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b)
            out.toggle_edge(nb[a], nb[b]);
    return out;
}

Graph pivot_three_sets(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw input_error("pivot: uv is not an edge");
    std::vector<int> both, only_u, only_v;
    for (int w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        bool au = g.adjacent(u, w), av = g.adjacent(v, w);
        if (au && av) both.push_back(w);
        else if (au) only_u.push_back(w);
        else if (av) only_v.push_back(w);
    }
    Graph out = g;
    auto flip_between = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b) out.toggle_edge(x, y);
    };
    flip_between(both, only_u);
    flip_between(both, only_v);
    flip_between(only_u, only_v);
    return out;
}

Graph pivot_via_local_complements(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw input_error("pivot: uv is not an edge");
    Graph lc = local_complement(local_complement(local_complement(g, u), v), u);
    // The triple local complementation interchanges the end-vertices u
    // and v; swap them back so the two pivot computations coincide.
    Graph out(lc.order());
    auto rename = [&](int w) { return w == u ? v : (w == v ? u : w); };
    for (auto [a, b] : lc.edges()) out.add_edge(rename(a), rename(b));
    return out;
}

Graph pivot(const Graph& g, int u, int v) {
    Graph out = pivot_three_sets(g, u, v);
    assert(out == pivot_via_local_complements(g, u, v));
    return out;
}

std::pair<Graph, PivotTrace> pivot_x_to_y(int n, bool keep_intermediates) {
    if (n < 1) throw input_error("pivot_x_to_y: n must be >= 1");
    GridGraph x = x_grid(2 * n, 2 * n);
    Graph g = x.graph;
    PivotTrace trace;
    for (int i = n; i >= 1; --i) {
        int u = x.vertex(2 * i - 1, 1);
        int v = x.vertex(2 * i, 1);
        g = pivot(g, u, v);
        trace.edges.emplace_back(u, v);
        if (keep_intermediates) trace.intermediates.push_back(g);
    }
    return {g, trace};
}

bool split_partition_valid(const Graph& g, const SplitPartition& p) {
    std::vector<int> side(g.order(), -1);
    for (int v : p.clique) {
        if (v < 0 || v >= g.order() || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : p.independent) {
        if (v < 0 || v >= g.order() || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (side[v] == -1) return false;
    for (size_t a = 0; a < p.clique.size(); ++a)
        for (size_t b = a + 1; b < p.clique.size(); ++b)
            if (!g.adjacent(p.clique[a], p.clique[b])) return false;
    for (size_t a = 0; a < p.independent.size(); ++a)
        for (size_t b = a + 1; b < p.independent.size(); ++b)
            if (g.adjacent(p.independent[a], p.independent[b])) return false;
    return true;
}

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
    });
    // Hammer-Simeone: with degrees sorted descending, the top m vertices
    // (m the largest index with d_i >= i-1) form the clique of a split
    // partition whenever the graph is split. Verify before returning.
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    SplitPartition p;
    for (int i = 0; i < n; ++i)
        (i < m ? p.clique : p.independent).push_back(order[i]);
    if (split_partition_valid(g, p)) return p;
    return std::nullopt;
}

Graph split_bipartite_transform(const Graph& g, const SplitPartition& p) {
    if (!split_partition_valid(g, p))
        throw input_error("split_bipartite_transform: invalid split partition");
    Graph out = g;
    for (size_t a = 0; a < p.clique.size(); ++a)
        for (size_t b = a + 1; b < p.clique.size(); ++b)
            out.remove_edge(p.clique[a], p.clique[b]);
    return out;
}

Graph bipartite_split_transform(const Graph& g, const Bipartition& b, BipartiteSide side) {
    if (!bipartition_valid(g, b))
        throw input_error("bipartite_split_transform: invalid bipartition");
    const std::vector<int>& part = (side == BipartiteSide::X) ? b.part_x : b.part_y;
    Graph out = g;
    for (size_t i = 0; i < part.size(); ++i)
        for (size_t j = i + 1; j < part.size(); ++j)
            out.add_edge(part[i], part[j]);
    return out;
}

namespace {

Bipartition two_colouring(const Graph& g) {
    auto b = find_bipartition(g);
    assert(b.has_value());
    return *b;
}

}  // namespace

Graph sun3_graph() {
    Graph g = matching_graph(3);
    Bipartition b;
    b.part_x = {0, 2, 4};
    b.part_y = {1, 3, 5};
    return bipartite_split_transform(g, b, BipartiteSide::X);
}

Graph co_sun3_graph() {
    Graph c6 = cycle_graph(6);
    return bipartite_split_transform(c6, two_colouring(c6), BipartiteSide::X);
}

Graph rising_sun_graph() {
    Graph p7 = path_graph(7);
    Bipartition b = two_colouring(p7);  // part_x = {0,2,4,6}
    return bipartite_split_transform(p7, b, BipartiteSide::X);
}

Graph co_rising_sun_graph() {
    Graph p7 = path_graph(7);
    Bipartition b = two_colouring(p7);
    return bipartite_split_transform(p7, b, BipartiteSide::Y);
}

}  // namespace chaingrid
