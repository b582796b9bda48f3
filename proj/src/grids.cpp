#include "chaingrid/grids.hpp"

#include <stdexcept>

namespace chaingrid {

namespace {

bool rule_directed(GridFamily family, int i, int j, int i2, int j2) {
    switch (family) {
        case GridFamily::X:
            return i2 == i + 1 && j >= j2;
        case GridFamily::Z:
            return (i % 2 == 1 && i2 == i + 1 && j > j2) ||
                   (i % 2 == 0 && i2 == i + 1 && j <= j2) ||
                   (i % 2 == 0 && i2 % 2 == 1 && i2 >= i + 3);
        case GridFamily::Y:
            return (i % 2 == 1 && i2 == i + 1 && j >= j2) ||
                   (i % 2 == 0 && i2 == i + 1 && j < j2) ||
                   (i % 2 == 0 && i2 % 2 == 1 && i2 >= i + 3) ||
                   (i % 2 == 1 && i2 == i - 1 && j == 1);
        case GridFamily::ZSplit:
            return rule_directed(GridFamily::Z, i, j, i2, j2) ||
                   (i % 2 == 0 && i2 % 2 == 0 && (i != i2 || j != j2));
    }
    return false;
}

GridGraph build(GridFamily family, int cols, int rows) {
    if (cols < 1 || rows < 1) throw input_error("grid: dimensions must be >= 1");
    GridGraph gg;
    gg.family = family;
    gg.cols = cols;
    gg.rows = rows;
    gg.graph = Graph(cols * rows);
    const int n = cols * rows;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (grid_rule(family, gg.col_of(u), gg.row_of(u), gg.col_of(v), gg.row_of(v)))
                gg.graph.add_edge(u, v);
    return gg;
}

}  // namespace

bool grid_rule(GridFamily family, int i, int j, int i2, int j2) {
    return rule_directed(family, i, j, i2, j2) || rule_directed(family, i2, j2, i, j);
}

bool GridGraph::coords_consistent() const {
    const int n = cols * rows;
    if (graph.order() != n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (graph.adjacent(u, v) !=
                grid_rule(family, col_of(u), row_of(u), col_of(v), row_of(v)))
                return false;
    return true;
}

GridGraph x_grid(int cols, int rows) { return build(GridFamily::X, cols, rows); }
GridGraph z_grid(int n, int k) { return build(GridFamily::Z, n, k); }
GridGraph y_grid(int n, int k) { return build(GridFamily::Y, n, k); }
GridGraph zsplit_grid(int n, int k) { return build(GridFamily::ZSplit, n, k); }

Graph chain_universal(int n) {
    if (n < 1) throw input_error("chain_universal: n must be >= 1");
    Graph g(2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            g.add_edge(i - 1, n + j - 1);  // a_i ~ b_j iff i >= j
    return g;
}

Bipartition chain_universal_parts(int n) {
    Bipartition b;
    for (int i = 0; i < n; ++i) b.part_x.push_back(i);
    for (int i = 0; i < n; ++i) b.part_y.push_back(n + i);
    return b;
}

AntichainGraph s_graph(int k) {
    if (k < 1) throw input_error("s_graph: k must be >= 1");
    AntichainGraph s;
    s.k = k;
    s.graph = Graph(2 * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (j == i || j >= i + 2) s.graph.add_edge(s.x_vertex(i), s.y_vertex(j));
    return s;
}

LabelledGraph s_circ(int k) {
    AntichainGraph s = s_graph(k);
    LabelledGraph lg;
    lg.graph = s.graph;
    lg.labels.assign(2 * k, 0);  // black
    lg.labels[s.x_vertex(1)] = 1;
    lg.labels[s.y_vertex(1)] = 1;
    lg.labels[s.x_vertex(k)] = 1;
    lg.labels[s.y_vertex(k)] = 1;
    return lg;
}

Graph t_graph(int k) {
    AntichainGraph s = s_graph(k);
    Graph g = s.graph;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            g.add_edge(s.x_vertex(i), s.x_vertex(j));
    return g;
}

LabelledGraph t_circ(int k) {
    LabelledGraph lg = s_circ(k);
    lg.graph = t_graph(k);
    return lg;
}

Embedding zy_cross_embedding(int n, CrossDirection direction) {
    if (n < 1) throw input_error("zy_cross_embedding: n must be >= 1");
    Embedding e;
    if (direction == CrossDirection::Z_into_Y) {
        GridGraph pattern = z_grid(n, n);
        GridGraph host = y_grid(2 * n, 2 * n);
        e.pattern_order = pattern.graph.order();
        e.map.resize(e.pattern_order);
        // z_{i,j} -> y_{i,i+j}; the image lies in rows 2..2n.
        for (int v = 0; v < e.pattern_order; ++v) {
            int i = pattern.col_of(v), j = pattern.row_of(v);
            e.map[v] = host.vertex(i, i + j);
        }
        if (!e.valid(pattern.graph, host.graph))
            throw std::logic_error("zy_cross_embedding: Z-into-Y map failed validation");
    } else {
        GridGraph pattern = y_grid(n, n);
        GridGraph host = z_grid(2 * n, 2 * n);
        e.pattern_order = pattern.graph.order();
        e.map.resize(e.pattern_order);
        for (int v = 0; v < e.pattern_order; ++v) {
            int i = pattern.col_of(v), j = pattern.row_of(v);
            if (n == 1) {
                e.map[v] = host.vertex(1, 1);  // single vertex
            } else if (j >= 2) {
                e.map[v] = host.vertex(i, n + j - i);  // descending diagonal band
            } else if (i % 2 == 0) {
                e.map[v] = host.vertex(i, 1);
            } else {
                e.map[v] = host.vertex(i + 2, 1);
            }
        }
        if (!e.valid(pattern.graph, host.graph))
            throw std::logic_error("zy_cross_embedding: Y-into-Z map failed validation");
    }
    return e;
}

}  // namespace chaingrid
