#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minors/drivers.hpp"
#include "minors/graph.hpp"
#include "minors/state.hpp"

namespace minors {

// One graph source; "kind" selects the generator.
struct GeneratorSpec {
    std::string kind;            // gnp | cliques | petersen | cycle | complete | edgeless | path | file | g6
    int n = 0;                   // gnp / cycle / complete / edgeless / path
    double p = 0.0;              // gnp
    std::uint64_t seed = 0;      // gnp
    int count = 1;               // gnp: graphs with seeds seed, seed+1, ...
    std::vector<int> sizes;      // cliques
    std::string path;            // file (graph6 or DIMACS by extension)
    std::string text;            // g6: inline graph6 string
};

// Parses "gnp:n=20,p=0.3,seed=1,count=5", "cliques:2,2,2,2,2", "cycle:7",
// "petersen", "file:/path/to/graph", ...
GeneratorSpec parse_generator(const std::string& text);

std::vector<Graph> generate(const GeneratorSpec& spec);

enum class AuditLevel { None, Fast, Full };

struct ExperimentSpec {
    std::vector<GeneratorSpec> generators;
    std::string algorithm = "all";  // dm2 | log | alpha5 | all
    AuditLevel audit = AuditLevel::Fast;
    std::uint64_t step1_budget = 20'000'000;
    std::string out_dir;  // when set, traces are written under <out_dir>/traces/
};

struct RecordAudit {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct RunRecord {
    int index = 0;
    std::string graph6;
    int n = 0;
    int alpha_g = 0;
    std::string algorithm;
    int guaranteed = 0;
    int achieved = 0;
    std::optional<int> oracle_h;
    std::optional<bool> conjecture_satisfied;  // alpha * h >= n, reported only
    std::vector<std::string> flags;
    std::vector<std::vector<int>> certificate;
    std::vector<RecordAudit> audits;
    std::string trace_ref;
    std::string error;  // nonempty when the driver failed
};

struct Report {
    int schema_version = 1;
    std::vector<RunRecord> records;
    bool all_pass = true;

    std::string to_json() const;  // sorted keys, byte-stable for fixed input
    std::string to_markdown() const;
};

Report run_experiments(const ExperimentSpec& spec);

// Audits one finished run; used by run_experiments and by the test suites.
std::vector<RecordAudit> audit_run(const Graph& g, const RunResult& r, AuditLevel level);

// Trace (de)serialization; replaying the decoded trace reproduces the run.
std::string trace_to_json(const RunTrace& trace);
RunTrace trace_from_json(const std::string& text);
std::string trace_hash(const RunTrace& trace);

// Verifies every certificate recorded in a report JSON against its graph.
// Returns the failures (empty = all certificates verify).
std::vector<std::string> reverify_report(const std::string& report_json);

// Bound table for alpha = 1..max_alpha: the 2a-1 and 2a-2 baselines, r, and
// the crossover marker.
std::string bounds_table_csv(int max_alpha);
std::string bounds_table_markdown(int max_alpha);

}  // namespace minors
