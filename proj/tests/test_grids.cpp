#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingrid/grids.hpp"

#include <algorithm>

using namespace chaingrid;

TEST_CASE("coordinate layout") {
    GridGraph g = x_grid(6, 6);
    CHECK(g.graph.order() == 36);
    CHECK(g.vertex(1, 1) == 0);
    CHECK(g.vertex(2, 1) == 6);
    for (int v = 0; v < 36; ++v) CHECK(g.vertex(g.col_of(v), g.row_of(v)) == v);
    CHECK_THROWS_AS(g.vertex(0, 1), input_error);
    CHECK_THROWS_AS(g.vertex(1, 7), input_error);
    CHECK_THROWS_AS(x_grid(0, 3), input_error);
}

TEST_CASE("coords round-trip for every family") {
    for (int cols = 1; cols <= 5; ++cols)
        for (int rows = 1; rows <= 5; ++rows) {
            CHECK(x_grid(cols, rows).coords_consistent());
            CHECK(y_grid(cols, rows).coords_consistent());
            CHECK(z_grid(cols, rows).coords_consistent());
            CHECK(zsplit_grid(cols, rows).coords_consistent());
        }
}

TEST_CASE("X-grid edge rule") {
    GridGraph g = x_grid(3, 3);
    // x_{i,j} ~ x_{i+1,j'} iff j >= j'
    CHECK(g.graph.adjacent(g.vertex(1, 2), g.vertex(2, 1)));
    CHECK(g.graph.adjacent(g.vertex(1, 2), g.vertex(2, 2)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(1, 2), g.vertex(2, 3)));
    // no edges inside a column or between distant columns
    CHECK_FALSE(g.graph.adjacent(g.vertex(1, 1), g.vertex(1, 2)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(1, 3), g.vertex(3, 1)));
    // a single column is edgeless
    CHECK(x_grid(1, 6).graph.edge_count() == 0);
}

TEST_CASE("Z-grid edge rule") {
    CHECK(z_grid(1, 1).graph.degree(0) == 0);

    GridGraph g = z_grid(7, 6);
    // odd -> even column: strict descent
    CHECK(g.graph.adjacent(g.vertex(1, 3), g.vertex(2, 2)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(1, 3), g.vertex(2, 3)));
    // even -> odd column: non-strict ascent
    CHECK(g.graph.adjacent(g.vertex(2, 3), g.vertex(3, 3)));
    CHECK(g.graph.adjacent(g.vertex(2, 3), g.vertex(3, 5)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(2, 3), g.vertex(3, 2)));
    // diagonals join even columns to all later odd columns at distance >= 3
    for (auto [a, b] : {std::pair{2, 5}, {2, 7}, {4, 7}})
        for (int j = 1; j <= 6; ++j)
            for (int j2 = 1; j2 <= 6; ++j2)
                CHECK(g.graph.adjacent(g.vertex(a, j), g.vertex(b, j2)));
    // but no other distant pairs
    CHECK_FALSE(g.graph.adjacent(g.vertex(1, 1), g.vertex(3, 1)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(2, 1), g.vertex(4, 1)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(3, 1), g.vertex(6, 1)));

    // bipartite with odd and even columns as the two sides
    auto b = find_bipartition(g.graph);
    REQUIRE(b.has_value());
    for (auto [u, v] : g.graph.edges()) CHECK(g.col_of(u) % 2 != g.col_of(v) % 2);
}

TEST_CASE("Y-grid edge rule") {
    CHECK(y_grid(2, 2).graph == x_grid(2, 2).graph);

    GridGraph g = y_grid(5, 4);
    // odd -> even column: non-strict descent; even -> odd: strict ascent
    CHECK(g.graph.adjacent(g.vertex(1, 2), g.vertex(2, 2)));
    CHECK(g.graph.adjacent(g.vertex(2, 2), g.vertex(3, 3)));
    CHECK_FALSE(g.graph.adjacent(g.vertex(2, 2), g.vertex(3, 2)));
    // bottom vertex of an odd column (i >= 3) sees all of the column before
    for (int j = 1; j <= 4; ++j) {
        CHECK(g.graph.adjacent(g.vertex(3, 1), g.vertex(2, j)));
        CHECK(g.graph.adjacent(g.vertex(5, 1), g.vertex(4, j)));
    }
    // diagonals as in the Z-grid
    CHECK(g.graph.adjacent(g.vertex(2, 1), g.vertex(5, 4)));
}

TEST_CASE("Z* grid is the Z-grid plus a clique on even columns") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k) {
            GridGraph zs = zsplit_grid(n, k);
            GridGraph z = z_grid(n, k);
            std::vector<int> evens;
            for (int v = 0; v < zs.graph.order(); ++v)
                if (zs.col_of(v) % 2 == 0) evens.push_back(v);
            CHECK(static_cast<int>(evens.size()) == k * (n / 2));
            for (size_t a = 0; a < evens.size(); ++a)
                for (size_t b = a + 1; b < evens.size(); ++b)
                    CHECK(zs.graph.adjacent(evens[a], evens[b]));
            // everything else matches the plain Z-grid
            for (int u = 0; u < z.graph.order(); ++u)
                for (int v = u + 1; v < z.graph.order(); ++v)
                    if (zs.col_of(u) % 2 == 1 || zs.col_of(v) % 2 == 1)
                        CHECK(zs.graph.adjacent(u, v) == z.graph.adjacent(u, v));
        }
}

TEST_CASE("universal chain graph") {
    Graph g = chain_universal(5);
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 15);
    Bipartition b = chain_universal_parts(5);
    CHECK(bipartition_valid(g, b));
    // a_i ~ b_j iff i >= j, so neighbourhoods are nested
    CHECK(g.adjacent(2, 5));       // a_3 b_1
    CHECK(g.adjacent(2, 7));       // a_3 b_3
    CHECK_FALSE(g.adjacent(2, 8)); // a_3 b_4
    CHECK(chain_universal(1) == matching_graph(1));
}

TEST_CASE("S_k") {
    AntichainGraph s = s_graph(5);
    CHECK(s.graph.order() == 10);
    CHECK(s.graph.edge_count() == 11);
    CHECK(s.graph.adjacent(s.x_vertex(2), s.y_vertex(2)));
    CHECK(s.graph.adjacent(s.x_vertex(2), s.y_vertex(4)));
    CHECK_FALSE(s.graph.adjacent(s.x_vertex(2), s.y_vertex(3)));
    CHECK_FALSE(s.graph.adjacent(s.x_vertex(2), s.y_vertex(1)));

    // S_3 splits into a 4-vertex piece and the isolated edge x2 y2
    auto comps = components(s_graph(3).graph);
    CHECK(comps.size() == 2);
}

TEST_CASE("labelled antichain members") {
    LabelledGraph sc = s_circ(7);
    AntichainGraph s = s_graph(7);
    int whites = 0;
    for (int l : sc.labels) whites += l;
    CHECK(whites == 4);
    CHECK(sc.labels[s.x_vertex(1)] == 1);
    CHECK(sc.labels[s.y_vertex(1)] == 1);
    CHECK(sc.labels[s.x_vertex(7)] == 1);
    CHECK(sc.labels[s.y_vertex(7)] == 1);
    CHECK(sc.labels[s.x_vertex(3)] == 0);

    // T_k adds the x-side clique and keeps the labels
    Graph t = t_graph(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            CHECK(t.adjacent(i - 1, j - 1));
    CHECK(t_circ(4).labels == s_circ(4).labels);
}

TEST_CASE("cross-embeddings between the Z and Y grids") {
    for (int n = 1; n <= 4; ++n) {
        Embedding zy = zy_cross_embedding(n, CrossDirection::Z_into_Y);
        CHECK(zy.valid(z_grid(n, n).graph, y_grid(2 * n, 2 * n).graph));
        GridGraph host = y_grid(2 * n, 2 * n);
        for (int v : zy.map) CHECK(host.row_of(v) > 1);  // image avoids row 1

        Embedding yz = zy_cross_embedding(n, CrossDirection::Y_into_Z);
        CHECK(yz.valid(y_grid(n, n).graph, z_grid(2 * n, 2 * n).graph));
    }
    CHECK_THROWS_AS(zy_cross_embedding(0, CrossDirection::Z_into_Y), input_error);
}
