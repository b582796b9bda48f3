#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingrid/classes.hpp"
#include "chaingrid/transforms.hpp"
#include "chaingrid/verify.hpp"

#include <random>

using namespace chaingrid;

TEST_CASE("local complementation") {
    SUBCASE("P3 at the middle becomes a triangle") {
        Graph p3 = path_graph(3);
        CHECK(local_complement(p3, 1) == complete_graph(3));
    }
    SUBCASE("degree <= 1 vertices change nothing") {
        Graph g = matching_graph(2);
        CHECK(local_complement(g, 0) == g);
        Graph h(3);
        h.add_edge(0, 1);
        CHECK(local_complement(h, 2) == h);  // isolated
    }
    SUBCASE("involution at every vertex") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = random_graph(1 + static_cast<int>(rng() % 7), rng);
            for (int v = 0; v < g.order(); ++v)
                CHECK(local_complement(local_complement(g, v), v) == g);
        }
    }
    CHECK_THROWS_AS(local_complement(path_graph(3), 3), input_error);
}

TEST_CASE("pivot") {
    SUBCASE("K2 is fixed") { CHECK(pivot(matching_graph(1), 0, 1) == matching_graph(1)); }
    SUBCASE("requires an edge") {
        CHECK_THROWS_AS(pivot(matching_graph(2), 0, 2), input_error);
    }
    SUBCASE("symmetric in the two ends, and an involution") {
        std::mt19937 rng(6);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
            for (auto [u, v] : g.edges()) {
                Graph p = pivot(g, u, v);
                CHECK(p == pivot(g, v, u));
                CHECK(pivot(p, u, v) == g);
            }
        }
    }
    SUBCASE("the two computations agree on every graph up to 6 vertices") {
        for (int n = 2; n <= 6; ++n)
            for_each_graph(n, [](const Graph& g) {
                for (auto [u, v] : g.edges())
                    CHECK(pivot_three_sets(g, u, v) == pivot_via_local_complements(g, u, v));
            });
    }
    SUBCASE("and on sampled 7-vertex graphs") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = random_graph(7, rng);
            for (auto [u, v] : g.edges())
                CHECK(pivot_three_sets(g, u, v) == pivot_via_local_complements(g, u, v));
        }
    }
    SUBCASE("pivoting a bipartite graph keeps it bipartite") {
        for (int n = 2; n <= 6; ++n)
            for_each_graph(n, [](const Graph& g) {
                if (!find_bipartition(g)) return;
                for (auto [u, v] : g.edges())
                    CHECK(find_bipartition(pivot(g, u, v)).has_value());
            });
    }
}

TEST_CASE("the X to Y pivot schedule") {
    SUBCASE("n=1 is a no-op pivot") {
        auto [g, trace] = pivot_x_to_y(1);
        CHECK(g == x_grid(2, 2).graph);
        CHECK(g == y_grid(2, 2).graph);
        REQUIRE(trace.edges.size() == 1);
    }
    SUBCASE("n=3 lands exactly on the Y-grid") {
        auto [g, trace] = pivot_x_to_y(3, true);
        CHECK(g == y_grid(6, 6).graph);
        CHECK(trace.edges.size() == 3);
        CHECK(trace.intermediates.size() == 3);
        // right to left along the bottom row
        GridGraph x = x_grid(6, 6);
        CHECK(trace.edges[0] == std::pair{x.vertex(5, 1), x.vertex(6, 1)});
        CHECK(trace.edges[2] == std::pair{x.vertex(1, 1), x.vertex(2, 1)});
        // each scheduled pair is an edge of the graph it is applied to
        Graph cur = x.graph;
        for (size_t i = 0; i < trace.edges.size(); ++i) {
            CHECK(cur.adjacent(trace.edges[i].first, trace.edges[i].second));
            cur = pivot(cur, trace.edges[i].first, trace.edges[i].second);
            CHECK(cur == trace.intermediates[i]);
        }
    }
    SUBCASE("the reverse schedule undoes it") {
        for (int n = 1; n <= 3; ++n) {
            GridGraph x = x_grid(2 * n, 2 * n);
            Graph g = y_grid(2 * n, 2 * n).graph;
            for (int i = 1; i <= n; ++i)  // left to right this time
                g = pivot(g, x.vertex(2 * i - 1, 1), x.vertex(2 * i, 1));
            CHECK(g == x.graph);
        }
    }
    CHECK_THROWS_AS(pivot_x_to_y(0), input_error);
}

TEST_CASE("split partitions") {
    Graph sun = sun3_graph();
    auto p = find_split_partition(sun);
    REQUIRE(p.has_value());
    CHECK(split_partition_valid(sun, *p));
    CHECK_FALSE(find_split_partition(matching_graph(2)).has_value());
    CHECK_FALSE(find_split_partition(cycle_graph(4)).has_value());
    CHECK_FALSE(find_split_partition(cycle_graph(5)).has_value());

    SplitPartition bogus{{0, 1}, {2, 3, 4, 5}};
    CHECK_FALSE(split_partition_valid(matching_graph(3), bogus));
}

TEST_CASE("the star transform G -> G*") {
    auto star = [](const Graph& g) {
        auto p = find_split_partition(g);
        REQUIRE(p.has_value());
        return split_bipartite_transform(g, *p);
    };
    CHECK(are_isomorphic(star(sun3_graph()), matching_graph(3)));
    CHECK(are_isomorphic(star(co_sun3_graph()), cycle_graph(6)));
    CHECK(are_isomorphic(star(rising_sun_graph()), path_graph(7)));
    CHECK(are_isomorphic(star(co_rising_sun_graph()), path_graph(7)));
    // the two P7-derived graphs differ: the completed sides have
    // different sizes
    CHECK_FALSE(are_isomorphic(rising_sun_graph(), co_rising_sun_graph()));

    SUBCASE("forward then inverse is the identity") {
        for_each_split_structure(3, 3, [](const Graph& g, const SplitPartition& p) {
            Graph b = split_bipartite_transform(g, p);
            Bipartition bip{p.clique, p.independent};
            CHECK(bipartite_split_transform(b, bip, BipartiteSide::X) == g);
        });
    }
    SUBCASE("invalid partition is rejected") {
        SplitPartition bogus{{0, 1}, {1, 2}};
        CHECK_THROWS_AS(split_bipartite_transform(complete_graph(3), bogus), input_error);
    }
}
