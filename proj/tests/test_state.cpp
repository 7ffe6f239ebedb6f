#include <doctest.h>

#include "minors/alpha.hpp"
#include "minors/generate.hpp"
#include "minors/state.hpp"

using namespace minors;

TEST_SUITE_BEGIN("family-ops");

TEST_CASE("extend on a path") {
    // P_3 0-1-2, T = {0}, x = {1,2}, k = 1: Case 1 with path (0,1,2).
    ColoredState st(path(3));
    st.add_seed_set(VertexSet::single(0), "t");
    auto rep = st.extend(0, VertexSet::of({1, 2}), 1);
    CHECK(rep.added.size() <= 2);
    CHECK(st.family()[0].ext == 2);
    CHECK(alpha(st.graph(), st.family()[0].verts) >= 2);
}

TEST_CASE("extend on C_5") {
    ColoredState st(cycle(5));
    st.add_seed_set(VertexSet::single(0), "t");
    auto rep = st.extend(0, VertexSet::of({1, 2, 3, 4}), 1);
    CHECK(rep.added.size() <= 2);
    // Lexicographic trace: path (0,1,2), absorb 1 and 2.
    CHECK(rep.added == VertexSet::of({1, 2}));
    CHECK(alpha(st.graph(), st.family()[0].verts) >= 2);
    // Lemma 7: alpha(x' - N(T')) dropped by at least 1 (from 1 to 0).
    VertexSet x_rest = VertexSet::of({3, 4}) - neighborhood(st.graph(), st.family()[0].verts);
    CHECK(alpha(st.graph(), x_rest) == 0);
}

TEST_CASE("extend rejects a dominated region") {
    // Star: center 0 dominates the leaves, alpha(x - N(T)) = 0.
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    ColoredState st(star);
    st.add_seed_set(VertexSet::single(0), "t");
    CHECK_THROWS_AS(st.extend(0, VertexSet::of({1, 2, 3}), 1), PreconditionError);
}

TEST_CASE("extend precondition failures name the condition") {
    ColoredState st(cycle(6));
    st.add_seed_set(VertexSet::single(0), "t");
    CHECK_THROWS_AS(st.extend(0, VertexSet::of({0, 1}), 1), PreconditionError);   // overlap
    CHECK_THROWS_AS(st.extend(0, VertexSet::of({2, 3}), 1), PreconditionError);   // disconnected from T
    CHECK_THROWS_AS(st.extend(0, VertexSet::of({1, 2}), 0), PreconditionError);   // k < 1
    CHECK_THROWS_AS(st.extend(5, VertexSet::of({1, 2}), 1), PreconditionError);   // bad index
}

TEST_CASE("extend along a length-3 path, absorbing two independent vertices") {
    // The only maximum independent set of x - N(T) is {3,4}, both at blue
    // distance 3 from T, and the path's third vertex neighbors both.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    ColoredState st(g);
    st.add_seed_set(VertexSet::single(0), "t");
    auto rep = st.extend(0, VertexSet::of({1, 2, 3, 4}), 2);
    CHECK(rep.added == VertexSet::of({1, 2, 3, 4}));
    CHECK(alpha(st.graph(), st.family()[0].verts) == 3);
    CHECK(st.family()[0].ext == 3);
    CHECK(st.extend_case_tally()[1] == 1);  // the two-or-more-neighbors branch
}

TEST_CASE("extend along a length-3 path whose third vertex has one independent neighbor") {
    // avail = {2,3,4,5} splits into the edges 2-4 and 3-5; the lex-min
    // maximum independent set is {2,3}, both at blue distance 3 from T,
    // and the path (0,1,4,2) reaches 2 through 4 with N(4) cap I = {2}.
    Graph g(6, {{0, 1}, {1, 4}, {1, 5}, {2, 4}, {3, 5}});
    ColoredState st(g);
    st.add_seed_set(VertexSet::single(0), "t");
    auto rep = st.extend(0, VertexSet::of({1, 2, 3, 4, 5}), 1);
    CHECK(rep.added == VertexSet::of({1, 4}));
    CHECK(alpha(st.graph(), st.family()[0].verts) >= 2);
    CHECK(st.extend_case_tally()[2] == 1);
}

TEST_CASE("extend final step along a length-3 path swaps into the independent set") {
    // x - N(T) has the unique maximum independent set {4,5} at blue
    // distance 3; the path's third vertex neighbors both of its members.
    Graph g(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    ColoredState st(g);
    st.add_seed_set(VertexSet::single(0), "t");
    auto rep = st.extend(0, VertexSet::of({1, 2, 3, 4, 5}), 1);
    CHECK(rep.added.size() <= 2);
    CHECK(alpha(st.graph(), st.family()[0].verts) >= 2);
    CHECK(st.extend_case_tally()[3] == 1);
}

TEST_CASE("break on the edgeless graph gives singleton sets, no red edges") {
    ColoredState st(edgeless(4));
    auto rep = st.break_set(st.graph().vertices(), 1, "b");
    CHECK(rep.new_set_indices.size() == 4);
    CHECK(rep.reddened.empty());
    for (const FamilySet& fs : st.family()) CHECK(fs.verts.size() == 1);
    CHECK(st.uncovered().empty());
}

TEST_CASE("break C_5 by 2 gives one P_3 and a residual 2-clique") {
    ColoredState st(cycle(5));
    auto rep = st.break_set(st.graph().vertices(), 2, "b");
    CHECK(rep.new_set_indices.size() == 1);
    CHECK(st.family()[0].verts == VertexSet::of({0, 1, 2}));
    CHECK(st.family()[0].ext == 2);
    VertexSet rest = st.uncovered();
    CHECK(rest == VertexSet::of({3, 4}));
    CHECK(alpha(st.graph(), rest) == 1);
}

TEST_CASE("break K_4 by 2 does nothing") {
    ColoredState st(complete(4));
    auto rep = st.break_set(st.graph().vertices(), 2, "b");
    CHECK(rep.new_set_indices.empty());
    CHECK(st.uncovered() == st.graph().vertices());
}

TEST_CASE("break preconditions") {
    ColoredState st(cycle(6));
    CHECK_THROWS_AS(st.break_set(VertexSet::of({0, 1}), 1, "b"), PreconditionError);  // touches rest
    CHECK_THROWS_AS(st.break_set(st.graph().vertices(), 0, "b"), PreconditionError);
}

TEST_CASE("acceptability") {
    SUBCASE("empty family, small components: ok") {
        ColoredState st(cycle(5));
        auto rep = st.is_acceptable_break(st.graph().vertices(), 2);
        CHECK(rep.ok);  // alpha(C_5) = 2 < 4
    }
    SUBCASE("component with alpha = 2k rejected") {
        ColoredState st(cycle(5));
        auto rep = st.is_acceptable_break(st.graph().vertices(), 1);
        CHECK(!rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].t_index == -1);
    }
    SUBCASE("set/component trichotomy") {
        // Two disjoint edges; T = {0} does not touch the component {2,3},
        // so alpha(D - N(T)) = alpha(D) and the breaking stays acceptable.
        Graph g(4, {{0, 1}, {2, 3}});
        ColoredState st(g);
        st.add_seed_set(VertexSet::of({0}), "t");
        CHECK(st.is_acceptable_break(VertexSet::of({2, 3}), 1).ok);
        // T = {0} touches the path 1-2-3 at one end: alpha(D - N(T)) = 1
        // sits strictly below alpha(D) = 2, so only k = 2 passes.
        Graph g2(4, {{0, 1}, {1, 2}, {2, 3}});
        ColoredState st2(g2);
        st2.add_seed_set(VertexSet::of({0}), "t");
        auto ok2 = st2.is_acceptable_break(VertexSet::of({1, 2, 3}), 2);
        CHECK(ok2.ok);
        auto bad = st2.is_acceptable_break(VertexSet::of({1, 2, 3}), 1);
        CHECK(!bad.ok);
        REQUIRE(!bad.violations.empty());
        CHECK(bad.violations.back().t_index == 0);
    }
}

TEST_CASE("touches") {
    ColoredState st(cycle(5));
    CHECK(st.touches(VertexSet::of({0}), VertexSet::of({0, 1}), TouchMode::BlueOnly));  // intersect
    CHECK(st.touches(VertexSet::of({0}), VertexSet::of({1}), TouchMode::Any));
    CHECK(!st.touches(VertexSet::of({0}), VertexSet::of({2}), TouchMode::Any));
    st.add_seed_set(VertexSet::single(0), "t");
    st.color_red({{0, 1}});
    CHECK(st.touches(VertexSet::of({0}), VertexSet::of({1}), TouchMode::Any));
    CHECK(!st.touches(VertexSet::of({0}), VertexSet::of({1}), TouchMode::BlueOnly));
}

TEST_CASE("color_red requires a family endpoint") {
    ColoredState st(cycle(5));
    CHECK_THROWS_AS(st.color_red({{0, 1}}), PreconditionError);
    st.add_seed_set(VertexSet::single(0), "t");
    st.color_red({{0, 1}});
    CHECK(st.is_red(0, 1));
    st.color_red({{0, 1}});  // idempotent
    CHECK_THROWS_AS(st.color_red({{0, 2}}), PreconditionError);  // not an edge
}

TEST_CASE("lemma 4 invariants hold after every operation") {
    // Exercise a multi-break run and check the per-set bounds directly.
    Graph g = gnp(14, 0.35, 99);
    ColoredState st(g);
    while (!st.uncovered().empty()) {
        VertexSet c = components(g, st.uncovered()).front();
        int ac = alpha(g, c);
        st.break_set(c, ac >= 2 ? ac : 1, "b");
        for (const FamilySet& fs : st.family()) {
            CHECK(fs.verts.size() <= 2 * fs.ext - 1);
            CHECK(fs.ext <= alpha(g, fs.verts));
        }
    }
}

TEST_CASE("trace replays to an identical state") {
    Graph g = gnp(12, 0.3, 7);
    ColoredState st(g);
    while (!st.uncovered().empty()) {
        VertexSet c = components(g, st.uncovered()).front();
        int ac = alpha(g, c);
        auto rep = st.is_acceptable_break(c, ac);
        st.trace_accept_check(c, ac, rep);
        st.break_set(c, ac, "b");
    }
    ColoredState re = replay_trace(g, st.trace());
    CHECK(re.same_final_state(st));
    CHECK(re.trace() == st.trace());
}

TEST_SUITE_END();
