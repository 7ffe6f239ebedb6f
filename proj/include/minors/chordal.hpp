#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "minors/graph.hpp"
#include "minors/state.hpp"

namespace minors {

// Exact weight arithmetic for the acceptance checks.
using Rat = boost::rational<long long>;

struct ContractionMap {
    Graph h;
    std::vector<VertexSet> origin;  // origin[i] = family set contracted to H-vertex i
};

// order[0..n-1] such that each vertex's earlier neighbors form a clique;
// its reversal is a simplicial elimination ordering.
struct EliminationOrder {
    std::vector<int> order;
};

struct PseoResult {
    bool ok = true;
    int i = -1, j = -1;       // witness pair of family positions
    VertexSet component;      // witness component
};

struct ChordalityResult {
    bool ok = false;
    EliminationOrder order;   // valid when ok
    std::vector<int> hole;    // induced cycle of length >= 4 when !ok
};

// Contracts each family set of the blue subgraph to one H-vertex, in family
// order. The family must partition V(g) into blue-connected sets.
ContractionMap contract_family(const Graph& g, const std::vector<std::uint64_t>& red,
                               const std::vector<FamilySet>& fam);
ContractionMap contract_family(const ColoredState& state);

// Partial simplicial elimination ordering test on the blue subgraph: for
// every blue-non-touching pair T_i, T_j (i < j) and every component C of
// G_b - T_1 - ... - T_j, at most one of the pair touches C in blue.
PseoResult is_pseo(const Graph& g, const std::vector<std::uint64_t>& red,
                   const std::vector<FamilySet>& fam);
PseoResult is_pseo(const ColoredState& state);

// Maximum-cardinality search plus perfect-elimination verification; returns
// a hole witness on failure.
ChordalityResult is_chordal(const Graph& h);

// Maximum clique of a chordal graph: best {v} + earlier-neighbors set along
// the elimination order, ties broken by first occurrence. The order is
// validated first.
VertexSet max_clique_chordal(const Graph& h, const EliminationOrder& order);

// Exact maximum weight of an independent set; enumeration with pruning.
// Throws SizeError beyond the vertex cap.
Rat alpha_weighted_bruteforce(const Graph& h, const std::vector<Rat>& weights, int cap = 22);

// ceil(w(V) / alpha_w(h)) for chordal h; an acceptance check only.
long long perfect_weight_bound(const Graph& h, const std::vector<Rat>& weights, int cap = 22);

}  // namespace minors
