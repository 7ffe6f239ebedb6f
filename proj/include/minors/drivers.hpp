#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minors/chordal.hpp"
#include "minors/graph.hpp"
#include "minors/state.hpp"
#include "minors/verify.hpp"

namespace minors {

struct RunResult {
    ColoredState state;
    ContractionMap contraction;
    MinorCertificate minor;
    int guaranteed_size = 0;
    int achieved_size = 0;
    std::string algorithm;
    std::vector<std::string> flags;  // case labels and fallback markers
};

// 2 alpha - 2 pipeline: per-component breakings only.
// Guarantee ceil(n / r) with r = n, n/3, n/(2 alpha - 2) by the alpha case.
RunResult run_dm2(const Graph& g);

// 2 alpha - log pipeline: per-component steps with red-coloring, the
// H0/H1/H2 split at b = ceil((alpha(C)+1)/2), the two extension substeps,
// and a final breaking by b. Guarantee ceil(n / (2 alpha - f(2 sqrt2 alpha))).
RunResult run_log(const Graph& g);

struct Alpha5Options {
    std::uint64_t step1_budget = 20'000'000;  // search nodes for the maximum family
};

// alpha = 5 pipeline from the specialized algorithm; guarantee ceil(5n/38).
RunResult run_alpha5(const Graph& g, const Alpha5Options& opt = {});

// Step 1 of the alpha = 5 run: a maximum-cardinality pairwise-touching
// family of disjoint singletons and induced paths on three vertices,
// found by exact branch and bound (throws BudgetExceededError beyond the
// node budget).
std::vector<VertexSet> max_touching_family(const Graph& g, std::uint64_t budget);

}  // namespace minors
