#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingrid/decomposition.hpp"
#include "chaingrid/grids.hpp"
#include "chaingrid/verify.hpp"

using namespace chaingrid;

namespace {

PartedSubgraph parted(int n, std::vector<int> x, std::vector<int> y,
                      const std::vector<std::pair<int, int>>& edges) {
    PartedSubgraph p{Graph(n), std::move(x), std::move(y)};
    for (auto [u, v] : edges) p.graph.add_edge(u, v);
    return p;
}

}  // namespace

TEST_CASE("compose") {
    SUBCASE("disjoint union of two edges is 2K2") {
        auto g1 = parted(4, {0}, {1}, {{0, 1}});
        auto g2 = parted(4, {2}, {3}, {{2, 3}});
        PartedSubgraph u = compose(DecompOp::DisjointUnion, g1, g2);
        CHECK(u.graph == matching_graph(2));
        CHECK(u.part_x == std::vector<int>{0, 2});
        CHECK(u.part_y == std::vector<int>{1, 3});
    }
    SUBCASE("join of two singletons is K2") {
        auto g1 = parted(2, {0}, {}, {});
        auto g2 = parted(2, {}, {1}, {});
        CHECK(compose(DecompOp::Join, g1, g2).graph == matching_graph(1));
    }
    SUBCASE("skew join is one-sided and not commutative") {
        auto g1 = parted(3, {0}, {1}, {});
        auto g2 = parted(3, {}, {2}, {});
        Graph ab = compose(DecompOp::SkewJoin, g1, g2).graph;  // adds 0-2 only
        Graph ba = compose(DecompOp::SkewJoin, g2, g1).graph;  // adds nothing
        CHECK(ab.adjacent(0, 2));
        CHECK(ab != ba);
        CHECK(ba.edge_count() == 0);
    }
    SUBCASE("overlapping operands are rejected") {
        auto g1 = parted(2, {0}, {}, {});
        auto g2 = parted(2, {0}, {1}, {});
        CHECK_THROWS_AS(compose(DecompOp::Join, g1, g2), input_error);
    }
}

TEST_CASE("canonically prime") {
    auto bip = [](const Graph& g) {
        auto b = find_bipartition(g);
        REQUIRE(b.has_value());
        return *b;
    };
    CHECK_FALSE(is_canonically_prime(matching_graph(2), bip(matching_graph(2))));
    CHECK_FALSE(is_canonically_prime(cycle_graph(6), bip(cycle_graph(6))));  // a join
    CHECK(is_canonically_prime(path_graph(7), bip(path_graph(7))));
    CHECK(is_canonically_prime(Graph(1), Bipartition{{0}, {}}));
    // K2 is the join of two singletons, so it is not prime
    CHECK_FALSE(is_canonically_prime(matching_graph(1), Bipartition{{0}, {1}}));

    SUBCASE("matches the brute force on all small bipartite structures") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for_each_bipartite_structure(a, b, [](const Graph& g, const Bipartition& bp) {
                    CHECK(is_canonically_prime(g, bp) ==
                          is_canonically_prime_brute_force(g, bp));
                });
    }
}

TEST_CASE("canonical decomposition trees") {
    SUBCASE("C6 decomposes at the top as a join") {
        Graph c6 = cycle_graph(6);
        auto b = find_bipartition(c6);
        auto tree = canonical_decompose(c6, *b);
        REQUIRE(tree != nullptr);
        CHECK_FALSE(tree->leaf);
        CHECK(tree->op == DecompOp::Join);
        CHECK(recompose(*tree, 6).graph == c6);
    }
    SUBCASE("P7 is a single prime node carrying its edges") {
        Graph p7 = path_graph(7);
        auto b = find_bipartition(p7);
        auto tree = canonical_decompose(p7, *b);
        REQUIRE(tree != nullptr);
        CHECK(tree->left == nullptr);
        CHECK(tree->prime_edges.size() == 6);
        CHECK(recompose(*tree, 7).graph == p7);
    }
    SUBCASE("recomposition identity on every bipartite structure up to 3+3") {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for_each_bipartite_structure(a, b, [&](const Graph& g, const Bipartition& bp) {
                    auto tree = canonical_decompose(g, bp);
                    REQUIRE(tree != nullptr);
                    CHECK(recompose(*tree, g.order()).graph == g);
                });
    }
    SUBCASE("skew join orientation is recorded") {
        // 2K2 skew 2K2: connected, bipartite complement connected, so
        // the root can only split as X1={0,1},Y1={2,3} over the rest
        auto g1 = parted(8, {0, 1}, {2, 3}, {{0, 2}, {1, 3}});
        auto g2 = parted(8, {4, 6}, {5, 7}, {{4, 5}, {6, 7}});
        PartedSubgraph g = compose(DecompOp::SkewJoin, g1, g2);
        Bipartition b{{0, 1, 4, 6}, {2, 3, 5, 7}};
        auto tree = canonical_decompose(g.graph, b);
        REQUIRE(tree != nullptr);
        CHECK_FALSE(tree->leaf);
        CHECK(tree->op == DecompOp::SkewJoin);
        REQUIRE(tree->left != nullptr);
        CHECK(tree->left->part_x == std::vector<int>{0, 1});
        CHECK(tree->left->part_y == std::vector<int>{2, 3});
        // every left-X vertex is complete to every right-Y vertex
        for (int x : tree->left->part_x)
            for (int y : tree->right->part_y) CHECK(g.graph.adjacent(x, y));
        CHECK(recompose(*tree, 8).graph == g.graph);
        CHECK_FALSE(is_canonically_prime(g.graph, b));
    }
}

TEST_CASE("split-side wrapper") {
    Graph zs = zsplit_grid(3, 2).graph;
    auto p = find_split_partition(zs);
    REQUIRE(p.has_value());
    auto tree = split_canonical_decompose(zs, *p);
    REQUIRE(tree != nullptr);
    // recomposing gives back G*, i.e. G minus the clique edges
    CHECK(recompose(*tree, zs.order()).graph == split_bipartite_transform(zs, *p));

    // a complete graph's star is edgeless, hence decomposable for n >= 2
    Graph k4 = complete_graph(4);
    auto pk = find_split_partition(k4);
    REQUIRE(pk.has_value());
    CHECK_FALSE(is_split_canonically_prime(k4, *pk));
}
