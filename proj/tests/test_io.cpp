#include <doctest.h>

#include "minors/generate.hpp"
#include "minors/io.hpp"

using namespace minors;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph6 basics") {
    Graph d = parse_graph6("D?{");
    CHECK(d.vertex_count() == 5);
    CHECK(serialize_graph6(d) == "D?{");

    Graph single = parse_graph6("@");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    // accepts the optional header and trailing newline
    CHECK(parse_graph6(">>graph6<<D?{\n") == d);
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D\x1f{"), ParseError);  // byte below 63
    try {
        parse_graph6("D?");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("graph6 long form for n >= 63") {
    Graph g = edgeless(63);
    std::string s = serialize_graph6(g);
    CHECK(s.rfind("~", 0) == 0);
    CHECK(parse_graph6(s) == g);
    CHECK_THROWS_AS(parse_graph6(serialize_graph6(edgeless(64)) + "?"), ParseError);
}

TEST_CASE("graph6 round trip over generated graphs") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : connected_graphs_upto_iso(n)) CHECK(parse_graph6(serialize_graph6(g)) == g);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = gnp(3 + static_cast<int>(seed % 30), 0.1 + 0.025 * static_cast<double>(seed % 30), seed);
        CHECK(parse_graph6(serialize_graph6(g)) == g);
    }
}

TEST_CASE("dimacs basics") {
    Graph tri = parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(tri == complete(3));

    Graph dup = parse_dimacs("p edge 3 2\ne 1 2\ne 1 2\n");
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 1\n"), ParseError);    // self-loop
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 9\n"), ParseError);    // out of range
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);                // edge before header
    CHECK_THROWS_AS(parse_dimacs("p vertex 3 0\n"), ParseError);         // wrong format tag
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
}

TEST_CASE("dimacs round trip") {
    Graph g = gnp(12, 0.4, 5);
    CHECK(parse_dimacs(serialize_dimacs(g)) == g);
    CHECK(parse_dimacs(serialize_dimacs(petersen())) == petersen());
}

TEST_SUITE_END();
