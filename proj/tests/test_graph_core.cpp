#include <doctest.h>

#include "minors/alpha.hpp"
#include "minors/generate.hpp"
#include "minors/graph.hpp"
#include "oracles.hpp"

using namespace minors;

TEST_SUITE_BEGIN("graph-core");

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidSetError);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), InvalidSetError);
    CHECK_THROWS_AS(Graph(70, {}), SizeError);
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});  // duplicates collapse
    CHECK(g.edge_count() == 1);
}

TEST_CASE("adjacency is symmetric") {
    Graph g = petersen();
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
}

TEST_CASE("induced subgraph") {
    Graph c5 = cycle(5);
    SUBCASE("consecutive cycle vertices give a path") {
        auto [h, back] = induced_subgraph(c5, VertexSet::of({0, 1, 2}));
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 2);
        CHECK(back == std::vector<int>{0, 1, 2});
    }
    SUBCASE("empty set gives the empty graph") {
        auto [h, back] = induced_subgraph(complete(4), VertexSet());
        CHECK(h.vertex_count() == 0);
        CHECK(back.empty());
    }
    SUBCASE("petersen outer cycle is C_5") {
        auto [h, back] = induced_subgraph(petersen(), VertexSet::range(5));
        CHECK(h.vertex_count() == 5);
        CHECK(h.edge_count() == 5);
        for (int v = 0; v < 5; ++v) CHECK((h.neighbors(v).size() == 2));
        CHECK(is_connected_within(h, h.vertices()));
    }
    SUBCASE("out-of-range set rejected") {
        CHECK_THROWS_AS(induced_subgraph(c5, VertexSet::of({0, 9})), InvalidSetError);
    }
}

TEST_CASE("components") {
    Graph c5 = cycle(5);
    CHECK(components(c5, c5.vertices()) == std::vector<VertexSet>{c5.vertices()});
    CHECK(components(c5, VertexSet::of({0, 2})) ==
          std::vector<VertexSet>{VertexSet::single(0), VertexSet::single(2)});
    CHECK(components(c5, VertexSet()).empty());

    SUBCASE("petersen minus a closed neighborhood matches the BFS oracle") {
        Graph p = petersen();
        VertexSet rest = p.vertices() - VertexSet::of({0, 1, 4, 5});  // N[0]
        auto got = components(p, rest);
        auto want = oracle::components_bfs(p, rest);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_vector() == want[i]);
    }
}

TEST_CASE("components partition and ordering properties") {
    int checked = 0;
    for_each_labeled_connected(5, [&](const Graph& g) {
        if (++checked % 7 != 0) return;  // sample
        VertexSet s(static_cast<std::uint64_t>(checked * 2654435761u) & g.vertices().bits());
        auto comps = components(g, s);
        VertexSet all;
        for (const auto& c : comps) {
            CHECK(!c.intersects(all));
            all |= c;
            CHECK(is_connected_within(g, c));
        }
        CHECK(all == s);
        // no edge crosses two outputs
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                CHECK(!neighborhood(g, comps[i]).intersects(comps[j]));
        // ordered by smallest contained vertex
        for (std::size_t i = 1; i < comps.size(); ++i)
            CHECK(comps[i - 1].lowest() < comps[i].lowest());
    });
}

TEST_CASE("neighborhood") {
    CHECK(neighborhood(complete(4), VertexSet::single(0)) == VertexSet::of({1, 2, 3}));
    CHECK(neighborhood(edgeless(5), VertexSet::of({1, 3})) == VertexSet());
    CHECK(neighborhood(cycle(5), VertexSet::of({0, 1})) == VertexSet::of({0, 1, 2, 4}));

    SUBCASE("union property") {
        Graph p = petersen();
        VertexSet s1 = VertexSet::of({0, 3}), s2 = VertexSet::of({6, 7});
        CHECK(neighborhood(p, s1 | s2) == (neighborhood(p, s1) | neighborhood(p, s2)));
    }
}

TEST_CASE("alpha on named graphs") {
    CHECK(alpha(complete(5), VertexSet::range(5)) == 1);
    CHECK(alpha(cycle(5), VertexSet::range(5)) == 2);
    CHECK(alpha(petersen(), VertexSet::range(10)) == 4);
    CHECK(alpha(petersen(), VertexSet()) == 0);
}

TEST_CASE("alpha equals the subset-enumeration oracle") {
    SUBCASE("all labeled graphs on up to 5 vertices") {
        for (int n = 1; n <= 5; ++n) {
            int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                std::vector<std::pair<int, int>> edges;
                int t = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++t)
                        if ((mask >> t) & 1) edges.emplace_back(i, j);
                Graph g(n, edges);
                CHECK(alpha(g, g.vertices()) == oracle::alpha_bruteforce(g, g.vertices()));
            }
        }
    }
    SUBCASE("all connected graphs on up to 8 vertices, one per isomorphism class") {
        for (int n = 6; n <= 8; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n))
                CHECK(alpha(g, g.vertices()) == oracle::alpha_bruteforce(g, g.vertices()));
    }
}

TEST_CASE("alpha subadditivity across components") {
    Graph g = disjoint_cliques({3, 4, 2});
    VertexSet s1 = VertexSet::range(3);             // first clique
    VertexSet s2 = VertexSet::range(7) - s1;        // second clique
    CHECK(alpha(g, s1 | s2) <= alpha(g, s1) + alpha(g, s2));
    CHECK(alpha(g, s1 | s2) == 2);
}

TEST_CASE("max_independent_set is the lexicographic minimum") {
    CHECK(max_independent_set(complete(4), VertexSet::range(4)) == VertexSet::single(0));
    CHECK(max_independent_set(edgeless(3), VertexSet::range(3)) == VertexSet::of({0, 1, 2}));
    CHECK(max_independent_set(cycle(5), VertexSet::range(5)) == VertexSet::of({0, 2}));

    SUBCASE("always independent and maximum") {
        for (const Graph& g : connected_graphs_upto_iso(6)) {
            VertexSet s = max_independent_set(g, g.vertices());
            CHECK(is_independent(g, s));
            CHECK(s.size() == alpha(g, g.vertices()));
        }
    }
}

TEST_CASE("extend_to_maximal_independent") {
    Graph c5 = cycle(5);
    CHECK(extend_to_maximal_independent(c5, c5.vertices(), VertexSet::single(0)) ==
          VertexSet::of({0, 2}));
    // already maximal -> fixpoint
    CHECK(extend_to_maximal_independent(c5, c5.vertices(), VertexSet::of({1, 3})) ==
          VertexSet::of({1, 3}));
    CHECK(extend_to_maximal_independent(edgeless(4), VertexSet::range(4), VertexSet()) ==
          VertexSet::range(4));
    CHECK_THROWS_AS(extend_to_maximal_independent(c5, c5.vertices(), VertexSet::of({0, 1})),
                    PreconditionError);
}

TEST_SUITE_END();
