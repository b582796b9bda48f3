#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingrid/classes.hpp"
#include "chaingrid/grids.hpp"
#include "chaingrid/verify.hpp"

#include <random>

using namespace chaingrid;

TEST_CASE("neighbourhood preorder") {
    // In the chain graph a_i ~ b_j iff i >= j the a-side is totally
    // ordered by neighbourhood inclusion.
    Graph g = chain_universal(4);
    NeighbourhoodPreorder pre = neighbourhood_preorder(g);
    CHECK(pre.le(0, 1));
    CHECK(pre.le(1, 2));
    CHECK_FALSE(pre.le(2, 1));

    SUBCASE("reflexive and transitive on random graphs") {
        std::mt19937 rng(9);
        for (int trial = 0; trial < 25; ++trial) {
            Graph h = random_graph(1 + static_cast<int>(rng() % 7), rng);
            NeighbourhoodPreorder p = neighbourhood_preorder(h);
            const int n = h.order();
            for (int x = 0; x < n; ++x) {
                CHECK(p.le(x, x));
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (p.le(x, y) && p.le(y, z)) CHECK(p.le(x, z));
            }
        }
    }
}

TEST_CASE("Dilworth number") {
    CHECK(dilworth_number(complete_graph(5)) == 1);
    CHECK(dilworth_number(matching_graph(2)) == 2);
    CHECK(dilworth_number(matching_graph(3)) == 3);
    CHECK(dilworth_number(zsplit_grid(4, 4).graph) <= 2);

    SUBCASE("matches brute force") {
        std::mt19937 rng(10);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = random_graph(1 + static_cast<int>(rng() % 7), rng);
            CHECK(dilworth_number(g) == dilworth_number_brute_force(g));
        }
    }
}

TEST_CASE("chain partitions") {
    SUBCASE("chain_universal is a single chain per part") {
        Graph g = chain_universal(5);
        Bipartition b = chain_universal_parts(5);
        RecognitionReport r = is_k_chain(g, b, 1);
        CHECK(r.verdict);
        REQUIRE(r.chains.size() == 2);
        CHECK(r.chains[0].size() == 1);
        CHECK(r.chains[1].size() == 1);
        CHECK(is_chain_part(g, b.part_x).has_value());
    }
    SUBCASE("the Z-grid needs two chains per part") {
        GridGraph z = z_grid(4, 4);
        auto b = find_bipartition(z.graph);
        REQUIRE(b.has_value());
        CHECK_FALSE(is_k_chain(z.graph, *b, 1).verdict);
        RecognitionReport r = is_k_chain(z.graph, *b, 2);
        CHECK(r.verdict);
        for (const auto& part : r.chains) CHECK(part.size() <= 2);
    }
    SUBCASE("3K2 is not 2-chain") {
        Graph g = matching_graph(3);
        Bipartition b{{0, 2, 4}, {1, 3, 5}};
        CHECK_FALSE(is_k_chain(g, b, 2).verdict);
    }
    SUBCASE("invalid bipartition is rejected") {
        CHECK_THROWS_AS(is_k_chain(matching_graph(2), Bipartition{{0, 1}, {2, 3}}, 2),
                        input_error);
    }
}

TEST_CASE("bichain recognition") {
    CHECK(is_bichain(z_grid(6, 6).graph).verdict);
    CHECK(is_bichain(chain_universal(4)).verdict);
    for (int k = 1; k <= 10; ++k) CHECK(is_bichain(s_graph(k).graph).verdict);

    SUBCASE("rejections carry a checkable witness") {
        for (const Graph& g : {cycle_graph(6), matching_graph(3), path_graph(7),
                               cycle_graph(3), cycle_graph(5), cycle_graph(7)}) {
            RecognitionReport r = is_bichain(g);
            CHECK_FALSE(r.verdict);
            CHECK(r.witness.valid(r.forbidden, g));
            CHECK_FALSE(r.forbidden_name.empty());
        }
        CHECK(is_bichain(cycle_graph(6)).forbidden_name == "C6");
        CHECK(is_bichain(matching_graph(3)).forbidden_name == "3K2");
    }
    SUBCASE("acceptance carries the 2-chain certificate") {
        RecognitionReport r = is_bichain(z_grid(4, 4).graph);
        REQUIRE(r.verdict);
        REQUIRE(r.bipartition.has_value());
        CHECK(bipartition_valid(z_grid(4, 4).graph, *r.bipartition));
        CHECK(r.chains.size() == 2);
    }
}

TEST_CASE("split recognition") {
    CHECK(is_split(complete_graph(4)).verdict);
    CHECK(is_split(zsplit_grid(3, 3).graph).verdict);
    for (const Graph& g : {matching_graph(2), cycle_graph(4), cycle_graph(5)}) {
        RecognitionReport r = is_split(g);
        CHECK_FALSE(r.verdict);
        CHECK(r.witness.valid(r.forbidden, g));
    }
    RecognitionReport ok = is_split(sun3_graph());
    REQUIRE(ok.verdict);
    REQUIRE(ok.split.has_value());
    CHECK(split_partition_valid(sun3_graph(), *ok.split));
}

TEST_CASE("split permutation recognition") {
    CHECK(is_split_permutation(zsplit_grid(4, 4).graph).verdict);
    CHECK(is_split_permutation(complete_graph(6)).verdict);
    CHECK(is_split_permutation(Graph(3)).verdict);

    for (const Graph& g : {sun3_graph(), co_sun3_graph(), rising_sun_graph(),
                           co_rising_sun_graph()}) {
        RecognitionReport r = is_split_permutation(g);
        CHECK_FALSE(r.verdict);
        CHECK(r.witness.valid(r.forbidden, g));
    }
    CHECK(is_split_permutation(sun3_graph()).forbidden_name == "Sun3");

    SUBCASE("agrees with split + Dilworth <= 2 on small split graphs") {
        for_each_split_structure(3, 3, [](const Graph& g, const SplitPartition&) {
            bool via_forbidden = is_split_permutation(g).verdict;
            bool via_dilworth = is_split(g).verdict && dilworth_number(g) <= 2;
            CHECK(via_forbidden == via_dilworth);
        });
    }
    SUBCASE("split-perm(G) iff bichain(G*)") {
        for_each_split_structure(3, 2, [](const Graph& g, const SplitPartition& p) {
            Graph star = split_bipartite_transform(g, p);
            CHECK(is_split_permutation(g).verdict == is_bichain(star).verdict);
        });
    }
}
