#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

// One set of the ordered family. `ext` starts at alpha(T) when the set is
// seeded (1 for break-born singletons) and grows by k per extension of
// amount k, so |T| <= 2 ext(T) - 1 and ext(T) <= alpha(T) hold throughout.
struct FamilySet {
    VertexSet verts;
    int ext = 1;
    std::string birth;  // step label, e.g. "dm2.b2", "III.5"
};

enum class TraceOp { Seed, Break, Extend, ColorRed, AcceptCheck, Note };

struct TraceEntry {
    TraceOp op;
    VertexSet x;                                // region (seed/break/extend/accept_check)
    int t_index = -1;                           // extend target
    int k = 0;                                  // break/extend/accept_check amount
    std::string label;                          // birth label or note text
    std::vector<std::pair<int, int>> red_edges; // color_red params / break outcome
    VertexSet added;                            // extend outcome
    std::vector<int> new_set_indices;           // break outcome
    bool ok = true;                             // accept_check verdict

    bool operator==(const TraceEntry&) const = default;
};

struct RunTrace {
    std::vector<TraceEntry> entries;
    bool operator==(const RunTrace&) const = default;
};

struct ExtendReport {
    VertexSet added;
};

struct BreakReport {
    std::vector<int> new_set_indices;
    std::vector<std::pair<int, int>> reddened;
};

struct AcceptViolation {
    int t_index;          // -1 for the per-component condition
    VertexSet component;
    std::string what;
};

struct AcceptabilityReport {
    bool ok = true;
    std::vector<AcceptViolation> violations;
};

enum class TouchMode { Any, BlueOnly };

// Mutable world of one algorithm run: the graph, the red/blue edge
// coloring, the ordered family, and the operation trace.
class ColoredState {
public:
    explicit ColoredState(Graph g);

    const Graph& graph() const { return g_; }
    const std::vector<FamilySet>& family() const { return family_; }
    const RunTrace& trace() const { return trace_; }
    const std::vector<std::uint64_t>& red_adjacency() const { return red_; }

    VertexSet covered() const { return covered_; }
    VertexSet uncovered() const { return g_.vertices() - covered_; }

    bool is_red(int u, int v) const { return (red_[static_cast<std::size_t>(u)] >> v) & 1; }
    VertexSet blue_neighbors(int v) const {
        return g_.neighbors(v) - VertexSet(red_[static_cast<std::size_t>(v)]);
    }
    VertexSet blue_neighborhood(VertexSet s) const;
    bool blue_connected_within(VertexSet s) const;
    std::vector<VertexSet> blue_components(VertexSet s) const;

    // True iff a and b intersect or are joined by an edge of the chosen class.
    bool touches(VertexSet a, VertexSet b, TouchMode mode) const;

    // Adds a directly-constructed set (no breaking involved); ext = alpha(verts).
    // Returns its family index.
    int add_seed_set(VertexSet verts, const std::string& birth);

    // Extends family set t_index into x by k following the four-case
    // shortest-path procedure; asserts the growth and reduction
    // postconditions before returning.
    ExtendReport extend(int t_index, VertexSet x, int k);

    // Breaking x by k: step (a) red-colors avoidable set/component pairs,
    // step (b) repeatedly seeds a singleton from a maximum independent set
    // and extends it by k-1 until every residual component has alpha < k.
    BreakReport break_set(VertexSet x, int k, const std::string& birth_label = "break");

    // The two acceptability conditions, evaluated against the pre-break state.
    AcceptabilityReport is_acceptable_break(VertexSet x, int k) const;

    // Colors the listed edges red; every edge must already exist and have an
    // endpoint inside the family. Re-coloring a red edge is a no-op.
    void color_red(const std::vector<std::pair<int, int>>& edges);

    // Trace-only records (drivers log acceptability verdicts and notes).
    void trace_accept_check(VertexSet x, int k, const AcceptabilityReport& rep);
    void trace_note(const std::string& text);

    // Structural invariants (disjointness, blue connectivity, the size and
    // extension-count bounds). Throws InvariantViolation on failure; runs
    // after every mutating operation.
    void assert_invariants() const;

    // Red coloring and family contents (with ext counters) coincide.
    bool same_final_state(const ColoredState& o) const;

    // How often each of the four extension branches ran (coverage probe).
    const std::array<int, 4>& extend_case_tally() const { return case_tally_; }

private:
    ExtendReport extend_core(int t_index, VertexSet x, int k);
    void check_break_region(VertexSet x, int k) const;
    std::vector<int> shortest_blue_path(VertexSet ambient, VertexSet from, VertexSet to) const;
    void paint_red(int u, int v, std::vector<std::pair<int, int>>* out);

    Graph g_;
    std::vector<std::uint64_t> red_;
    std::vector<FamilySet> family_;
    RunTrace trace_;
    VertexSet covered_;
    std::array<int, 4> case_tally_{};
};

// Re-executes a trace from the initial state, verifying each recorded
// outcome; the result must reproduce the final state bit for bit.
ColoredState replay_trace(const Graph& g, const RunTrace& trace);

}  // namespace minors
