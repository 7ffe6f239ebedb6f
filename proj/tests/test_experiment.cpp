#include <doctest.h>

#include <json.hpp>

#include "minors/alpha.hpp"
#include "minors/experiment.hpp"
#include "minors/generate.hpp"
#include "minors/io.hpp"

using namespace minors;

TEST_SUITE_BEGIN("harness");

TEST_CASE("generator parsing") {
    auto gs = parse_generator("gnp:n=20,p=0.3,seed=7,count=4");
    CHECK(gs.kind == "gnp");
    CHECK(gs.n == 20);
    CHECK(gs.p == doctest::Approx(0.3));
    CHECK(gs.seed == 7);
    CHECK(gs.count == 4);

    auto cs = parse_generator("cliques:2,2,2,2,2");
    CHECK(cs.sizes == std::vector<int>{2, 2, 2, 2, 2});

    CHECK(parse_generator("cycle:9").n == 9);
    CHECK(parse_generator("petersen").kind == "petersen");
    CHECK_THROWS_AS(parse_generator("nope:1"), PreconditionError);
}

TEST_CASE("generators") {
    SUBCASE("gnp endpoints and determinism") {
        CHECK(gnp(8, 0.0, 1) == edgeless(8));
        CHECK(gnp(8, 1.0, 1) == complete(8));
        CHECK(gnp(18, 0.4, 33) == gnp(18, 0.4, 33));
        CHECK(!(gnp(18, 0.4, 33) == gnp(18, 0.4, 34)));
    }
    SUBCASE("disjoint cliques have alpha = number of cliques") {
        Graph g = disjoint_cliques({2, 2, 2, 2, 2});
        CHECK(g.vertex_count() == 10);
        CHECK(alpha(g, g.vertices()) == 5);
        Graph h = disjoint_cliques({3, 1, 4});
        CHECK(alpha(h, h.vertices()) == 3);
    }
}

TEST_CASE("trace serialization round trip") {
    Graph g = gnp(12, 0.35, 19);
    auto r = run_log(g);
    std::string js = trace_to_json(r.state.trace());
    RunTrace back = trace_from_json(js);
    CHECK(back == r.state.trace());
    ColoredState re = replay_trace(g, back);
    CHECK(re.same_final_state(r.state));
    CHECK(trace_hash(back) == trace_hash(r.state.trace()));
}

TEST_CASE("run_experiments report") {
    ExperimentSpec spec;
    spec.generators.push_back(parse_generator("gnp:n=10,p=0.35,seed=5,count=3"));
    spec.generators.push_back(parse_generator("cycle:5"));
    spec.algorithm = "all";
    spec.audit = AuditLevel::Full;
    Report rep = run_experiments(spec);
    CHECK(rep.all_pass);
    CHECK(!rep.records.empty());
    for (const auto& rec : rep.records) {
        CHECK(rec.error.empty());
        for (const auto& a : rec.audits) {
            INFO(rec.index, " ", rec.algorithm, " ", a.name, " ", a.detail);
            CHECK(a.pass);
        }
    }

    SUBCASE("same spec, same bytes") {
        Report rep2 = run_experiments(spec);
        CHECK(rep.to_json() == rep2.to_json());
    }
    SUBCASE("certificates in the report re-verify") {
        CHECK(reverify_report(rep.to_json()).empty());
    }
    SUBCASE("tampered certificates are caught") {
        auto doc = nlohmann::json::parse(rep.to_json());
        doc["records"][0]["certificate"].erase(0);
        CHECK(!reverify_report(doc.dump()).empty());
    }
}

TEST_CASE("driver errors are recorded, not thrown") {
    ExperimentSpec spec;
    spec.generators.push_back(parse_generator("cycle:5"));
    spec.algorithm = "alpha5";  // alpha(C_5) = 2: precondition error
    Report rep = run_experiments(spec);
    REQUIRE(rep.records.size() == 1);
    CHECK(!rep.records[0].error.empty());
    CHECK(!rep.all_pass);
}

TEST_CASE("bound tables") {
    std::string csv = bounds_table_csv(20);
    CHECK(csv.find("14,27,26,25,1") != std::string::npos);
    CHECK(csv.find("13,25,24,24,0") != std::string::npos);
    std::string md = bounds_table_markdown(15);
    CHECK(md.find("| 14 | 27 | 26 | 25 | yes |") != std::string::npos);
}

TEST_SUITE_END();
