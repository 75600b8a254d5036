#include <doctest.h>

#include <nlohmann/json.hpp>

#include "reeb/graph.hpp"
#include "reeb/io.hpp"

#include "helpers.hpp"

using namespace reeb;
using nlohmann::json;

TEST_CASE("dot parsing") {
    OrientedMultigraph g = parse_dot("digraph T { m -> a; a -> b; a -> b; b -> M; }");
    CHECK(is_isomorphic(g, helpers::torus_graph()).has_value());
    CHECK(g.edges()[0].id == "e0"); // ids follow statement order

    // node statements, comments, quoted ids
    OrientedMultigraph h = parse_dot(
        "// header comment\n"
        "digraph {\n"
        "  \"a b\" -> c; # trailing comment\n"
        "  c -> d [label=\"x\"];\n"
        "}\n");
    CHECK(h.vertices().size() == 3);
    CHECK(h.has_vertex("a b"));
    CHECK(h.edges().size() == 2);

    CHECK_THROWS(parse_dot("graph G { a -- b; }"));  // undirected
    CHECK_THROWS(parse_dot("digraph { a -> a; }"));  // self-loop
    CHECK_THROWS(parse_dot("digraph { a -> b"));     // unbalanced
}

TEST_CASE("dot round trip") {
    for (const auto& g : {helpers::torus_graph(), helpers::theta_graph(), gamma0()}) {
        OrientedMultigraph back = parse_dot(to_dot(g));
        CHECK(is_isomorphic(g, back).has_value());
    }
}

TEST_CASE("json round trip is exact") {
    for (const auto& g : {helpers::torus_graph(), helpers::theta_graph(), gamma0()}) {
        OrientedMultigraph back = graph_from_json(graph_to_json(g));
        CHECK(back.vertices() == g.vertices());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("json schema shape") {
    json j = graph_to_json(gamma0());
    CHECK(j["vertices"] == json::array({"s", "t"}));
    CHECK(j["edges"][0]["id"] == "e");
    CHECK(j["edges"][0]["src"] == "s");
    CHECK(j["edges"][0]["dst"] == "t");
    CHECK_THROWS(graph_from_json(json{{"vertices", {"a"}}})); // missing edges
}

TEST_CASE("parse_graph dispatches on format") {
    OrientedMultigraph from_dot = parse_graph("digraph { s -> t; }");
    OrientedMultigraph from_json =
        parse_graph(graph_to_json(gamma0()).dump());
    CHECK(is_isomorphic(from_dot, from_json).has_value());
}
