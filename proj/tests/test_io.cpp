#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingrid/io.hpp"
#include "chaingrid/verify.hpp"

#include <cstdio>
#include <fstream>

using namespace chaingrid;

TEST_CASE("graph JSON round-trip") {
    GraphDocument doc;
    doc.graph = cycle_graph(6);
    doc.parts = Bipartition{{0, 2, 4}, {1, 3, 5}};
    doc.labels = std::vector<int>{1, 0, 0, 0, 0, 1};

    nlohmann::json j = graph_to_json(doc);
    CHECK(j["n"] == 6);
    CHECK(j["edges"].size() == 6);

    GraphDocument back = graph_from_json(j);
    CHECK(back.graph == doc.graph);
    REQUIRE(back.parts.has_value());
    CHECK(back.parts->part_x == doc.parts->part_x);
    CHECK(back.labels == doc.labels);
    CHECK_FALSE(back.coords.has_value());
}

TEST_CASE("grid documents carry coordinates") {
    GraphDocument doc = document_from_grid(z_grid(3, 2));
    REQUIRE(doc.coords.has_value());
    CHECK(doc.coords->size() == 6);
    CHECK(doc.coords->at(0) == std::pair{1, 1});
    CHECK(doc.coords->at(5) == std::pair{3, 2});

    std::string dot = graph_to_dot(doc);
    CHECK(dot.find("c1r1") != std::string::npos);
    CHECK(dot.find("c3r2") != std::string::npos);

    GraphDocument back = graph_from_json(graph_to_json(doc));
    CHECK(back.graph == doc.graph);
    REQUIRE(back.coords.has_value());
    CHECK(*back.coords == *doc.coords);
}

TEST_CASE("malformed input is an input error") {
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), input_error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0]]})")),
                    input_error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")),
                    input_error);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), input_error);
}

TEST_CASE("graph files round-trip through disk") {
    const std::string path = "io_roundtrip_tmp.json";
    GraphDocument doc;
    doc.graph = chain_universal(3);
    doc.parts = chain_universal_parts(3);
    write_json_file(path, graph_to_json(doc));
    GraphDocument back = read_graph_file(path);
    CHECK(back.graph == doc.graph);
    REQUIRE(back.parts.has_value());
    CHECK(back.parts->part_y == doc.parts->part_y);
    std::remove(path.c_str());

    // not JSON at all
    std::ofstream(path) << "not json";
    CHECK_THROWS_AS(read_graph_file(path), input_error);
    std::remove(path.c_str());
}

TEST_CASE("letter system JSON") {
    LetterSystem l = zsplit_letter_encoding(4, 3);
    nlohmann::json j = letter_system_to_json(l);
    CHECK(j["k"] == l.k);
    LetterSystem back = letter_system_from_json(j);
    CHECK(back.k == l.k);
    CHECK(back.s == l.s);
    CHECK(back.word == l.word);
    CHECK_THROWS_AS(letter_system_from_json(nlohmann::json::parse(R"({"k": 2})")), input_error);
}

TEST_CASE("decomposition JSON shapes") {
    SUBCASE("2K2 is a + of two edges") {
        Graph g = matching_graph(2);
        auto tree = canonical_decompose(g, Bipartition{{0, 2}, {1, 3}});
        nlohmann::json j = decomposition_to_json(*tree);
        CHECK(j["op"] == "+");
        CHECK(j["children"].size() == 2);
    }
    SUBCASE("P7 is one prime node with its edge list") {
        Graph g = path_graph(7);
        auto b = find_bipartition(g);
        auto tree = canonical_decompose(g, *b);
        nlohmann::json j = decomposition_to_json(*tree);
        CHECK(j["op"] == "prime");
        CHECK(j["edges"].size() == 6);
    }
    SUBCASE("leaves are plain vertex ids") {
        Graph g(2);
        g.add_edge(0, 1);
        auto tree = canonical_decompose(g, Bipartition{{0}, {1}});
        nlohmann::json j = decomposition_to_json(*tree);
        CHECK(j["op"] == "x");
        CHECK(j["children"][0] == 0);
        CHECK(j["children"][1] == 1);
    }
}

TEST_CASE("expression JSON") {
    auto expr = CwExpr::join(
        1, 2, CwExpr::unite(CwExpr::create(0, 1), CwExpr::relabel(1, 2, CwExpr::create(1, 1))));
    nlohmann::json j = cw_expr_to_json(*expr);
    REQUIRE(j.is_array());
    CHECK(j[0] == "join");
    CHECK(j[1] == 1);
    CHECK(j[2] == 2);
    CHECK(j[3][0] == "union");
    CHECK(j[3][1] == nlohmann::json::parse(R"(["create", 0, 1])"));
    CHECK(j[3][2][0] == "relabel");
}
