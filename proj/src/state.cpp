#include "minors/state.hpp"

#include <algorithm>

#include "minors/alpha.hpp"

namespace minors {

ColoredState::ColoredState(Graph g) : g_(std::move(g)) {
    red_.assign(static_cast<std::size_t>(g_.vertex_count()), 0);
}

VertexSet ColoredState::blue_neighborhood(VertexSet s) const {
    require_valid_set(g_, s);
    VertexSet nb;
    for (int v : s) nb |= blue_neighbors(v);
    return nb;
}

std::vector<VertexSet> ColoredState::blue_components(VertexSet s) const {
    require_valid_set(g_, s);
    std::vector<VertexSet> comps;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= blue_neighbors(v);
            frontier = (next & rest) - comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        rest -= comp;
    }
    return comps;
}

bool ColoredState::blue_connected_within(VertexSet s) const {
    if (s.size() <= 1) return true;
    return blue_components(s).size() == 1;
}

bool ColoredState::touches(VertexSet a, VertexSet b, TouchMode mode) const {
    require_valid_set(g_, a);
    require_valid_set(g_, b);
    if (a.intersects(b)) return true;
    VertexSet nb = (mode == TouchMode::Any) ? neighborhood(g_, a) : blue_neighborhood(a);
    return nb.intersects(b);
}

int ColoredState::add_seed_set(VertexSet verts, const std::string& birth) {
    require_valid_set(g_, verts);
    if (verts.empty()) throw PreconditionError("seed set must be nonempty");
    if (verts.intersects(covered_)) throw PreconditionError("seed set overlaps the family");
    if (!blue_connected_within(verts)) throw PreconditionError("seed set not connected in the blue subgraph");
    int idx = static_cast<int>(family_.size());
    family_.push_back({verts, alpha(g_, verts), birth});
    covered_ |= verts;
    TraceEntry e;
    e.op = TraceOp::Seed;
    e.x = verts;
    e.label = birth;
    trace_.entries.push_back(std::move(e));
    assert_invariants();
    return idx;
}

// Lexicographically smallest shortest path from `from` to `to` inside the
// blue subgraph restricted to `ambient`. Returned as a vertex sequence.
std::vector<int> ColoredState::shortest_blue_path(VertexSet ambient, VertexSet from, VertexSet to) const {
    // BFS from the target side so the walk below can descend by distance.
    std::vector<int> dist(static_cast<std::size_t>(g_.vertex_count()), -1);
    VertexSet layer = to & ambient;
    for (int v : layer) dist[static_cast<std::size_t>(v)] = 0;
    VertexSet seen = layer;
    int d = 0;
    while (!layer.empty()) {
        VertexSet next;
        for (int v : layer) next |= blue_neighbors(v);
        next = (next & ambient) - seen;
        ++d;
        for (int v : next) dist[static_cast<std::size_t>(v)] = d;
        seen |= next;
        layer = next;
    }
    int best = -1, start = -1;
    for (int v : from)
        if (dist[static_cast<std::size_t>(v)] >= 0 && (best < 0 || dist[static_cast<std::size_t>(v)] < best)) {
            best = dist[static_cast<std::size_t>(v)];
            start = v;
        }
    if (start < 0) throw InvariantViolation("no blue path between the extension endpoints");
    std::vector<int> path{start};
    int cur = start;
    for (int left = best - 1; left >= 0; --left) {
        VertexSet nbrs = blue_neighbors(cur) & ambient;
        int chosen = -1;
        for (int v : nbrs)
            if (dist[static_cast<std::size_t>(v)] == left) {
                chosen = v;
                break;
            }
        path.push_back(chosen);
        cur = chosen;
    }
    return path;
}

ExtendReport ColoredState::extend(int t_index, VertexSet x, int k) {
    ExtendReport rep = extend_core(t_index, x, k);
    TraceEntry e;
    e.op = TraceOp::Extend;
    e.x = x;
    e.t_index = t_index;
    e.k = k;
    e.added = rep.added;
    trace_.entries.push_back(std::move(e));
    return rep;
}

ExtendReport ColoredState::extend_core(int t_index, VertexSet x, int k) {
    require_valid_set(g_, x);
    if (t_index < 0 || t_index >= static_cast<int>(family_.size()))
        throw PreconditionError("extend: no such family set");
    if (k < 1) throw PreconditionError("extend: amount must be positive");
    if (x.intersects(covered_)) throw PreconditionError("extend: region overlaps the family");

    const VertexSet t0 = family_[static_cast<std::size_t>(t_index)].verts;
    for (int v : t0)
        if (VertexSet(red_[static_cast<std::size_t>(v)]).intersects(x))
            throw PreconditionError("extend: red edges between the set and the region");
    const VertexSet ambient = x | t0;
    if (!blue_connected_within(ambient))
        throw PreconditionError("extend: blue subgraph on region + set is disconnected");

    const VertexSet avail = x - neighborhood(g_, t0);
    const int alpha_avail = alpha(g_, avail);
    if (k > alpha_avail) throw PreconditionError("extend: amount exceeds alpha(x - N(T))");
    const int alpha_before = alpha(g_, t0);

    VertexSet t = t0;
    VertexSet ind = max_independent_set(g_, avail);

    // Re-extends `ind` to a maximal independent set over what the region
    // still offers after the set has grown.
    auto remaximalize = [&]() {
        VertexSet domain = (x - t) - neighborhood(g_, t);
        VertexSet blocked = neighborhood(g_, ind);
        for (int v : domain - ind - blocked) {
            if (blocked.contains(v)) continue;
            ind.add(v);
            blocked |= g_.neighbors(v);
        }
    };

    int gained = 0;
    while (gained < k) {
        VertexSet targets = ind - t;
        if (targets.empty()) throw InvariantViolation("extend: ran out of independent-set targets");
        std::vector<int> path = shortest_blue_path(ambient, t, targets);
        const int len = static_cast<int>(path.size()) - 1;
        if (len < 2 || len > 3) throw InvariantViolation("extend: path length outside {2, 3}");

        if (len == 2) {
            // Case 1: absorb the middle vertex and its independent-set neighbors.
            ++case_tally_[0];
            const int mid = path[1];
            VertexSet cand = g_.neighbors(mid) & (ind - t);
            int r = std::min(k - gained, cand.size());
            t.add(mid);
            for (int v : cand) {
                if (r == 0) break;
                t.add(v);
                --r;
                ++gained;
            }
        } else {
            const int p2 = path[1], p3 = path[2], p4 = path[3];
            VertexSet nbr = g_.neighbors(p3) & (ind - t);
            if (nbr.size() >= 2 && gained <= k - 2) {
                // Case 2
                ++case_tally_[1];
                int r = std::min(k - gained, nbr.size());
                t.add(p2);
                t.add(p3);
                for (int v : nbr) {
                    if (r == 0) break;
                    t.add(v);
                    --r;
                    ++gained;
                }
                remaximalize();
            } else if (nbr.size() == 1) {
                // Case 3: swap p4 for p3 in the independent set, absorb p2, p3.
                ++case_tally_[2];
                ind.remove(p4);
                ind.add(p3);
                t.add(p2);
                t.add(p3);
                ++gained;
                remaximalize();
            } else {
                // Case 4: final step, |N(p3) cap I| >= 2.
                ++case_tally_[3];
                t.add(p2);
                t.add(p3);
                ind.remove(p4);
                ind.add(p3);
                ++gained;
            }
        }
    }

    const VertexSet added = t - t0;
    if (!added.subset_of(x)) throw InvariantViolation("extend: grew outside the region");
    if (added.size() > 2 * k) throw InvariantViolation("extend: added more than 2k vertices");
    if (!blue_connected_within(t)) throw InvariantViolation("extend: set lost blue connectivity");
    if (alpha(g_, t) < alpha_before + k)
        throw InvariantViolation("extend: alpha(T) did not rise by k");
    VertexSet x_rest = (x - t) - neighborhood(g_, t);
    if (alpha(g_, x_rest) > alpha_avail - k)
        throw InvariantViolation("extend: alpha(x - N(T)) did not drop by k");

    family_[static_cast<std::size_t>(t_index)].verts = t;
    family_[static_cast<std::size_t>(t_index)].ext += k;
    covered_ |= added;
    assert_invariants();
    return {added};
}

void ColoredState::paint_red(int u, int v, std::vector<std::pair<int, int>>* out) {
    if (is_red(u, v)) return;
    red_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    red_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    if (out) out->emplace_back(std::min(u, v), std::max(u, v));
}

void ColoredState::check_break_region(VertexSet x, int k) const {
    require_valid_set(g_, x);
    if (k < 1) throw PreconditionError("break: amount must be >= 1");
    if (x.intersects(covered_)) throw PreconditionError("break: region overlaps the family");
    if (neighborhood(g_, x).intersects(uncovered() - x))
        throw PreconditionError("break: region touches uncovered vertices outside it");
}

BreakReport ColoredState::break_set(VertexSet x, int k, const std::string& birth_label) {
    check_break_region(x, k);
    BreakReport rep;

    // Step (a): color every fully-avoidable set/component pair red.
    auto comps = components(g_, x);
    for (const FamilySet& fs : family_) {
        VertexSet nb = neighborhood(g_, fs.verts);
        for (const VertexSet& d : comps) {
            if (alpha(g_, d - nb) != alpha(g_, d)) continue;
            for (int u : fs.verts)
                for (int v : g_.neighbors(u) & d) paint_red(u, v, &rep.reddened);
        }
    }

    // Step (b): seed singletons from maximum independent sets, extending each
    // by k-1, until no residual component has independence number >= k.
    VertexSet rest = x;
    while (true) {
        VertexSet pick;
        for (const VertexSet& d : components(g_, rest))
            if (alpha(g_, d) >= k) {
                pick = d;
                break;
            }
        if (pick.empty()) break;
        int v = max_independent_set(g_, pick).lowest();
        int idx = static_cast<int>(family_.size());
        family_.push_back({VertexSet::single(v), 1, birth_label});
        covered_.add(v);
        rest.remove(v);
        if (k > 1) extend_core(idx, pick - VertexSet::single(v), k - 1);
        rest -= family_[static_cast<std::size_t>(idx)].verts;
        if (family_[static_cast<std::size_t>(idx)].ext != k)
            throw InvariantViolation("break: new set has ext != k");
        if (alpha(g_, family_[static_cast<std::size_t>(idx)].verts) < k)
            throw InvariantViolation("break: new set has alpha < k");
        rep.new_set_indices.push_back(idx);
    }
    for (const VertexSet& d : components(g_, rest))
        if (alpha(g_, d) >= k) throw InvariantViolation("break: residual component with alpha >= k");

    TraceEntry e;
    e.op = TraceOp::Break;
    e.x = x;
    e.k = k;
    e.label = birth_label;
    e.red_edges = rep.reddened;
    e.new_set_indices = rep.new_set_indices;
    trace_.entries.push_back(std::move(e));
    assert_invariants();
    return rep;
}

AcceptabilityReport ColoredState::is_acceptable_break(VertexSet x, int k) const {
    check_break_region(x, k);
    AcceptabilityReport rep;
    auto comps = components(g_, x);
    for (const VertexSet& d : comps) {
        int a = alpha(g_, d);
        if (a >= 2 * k)
            rep.violations.push_back(
                {-1, d, "component has alpha = " + std::to_string(a) + " >= 2k"});
    }
    for (std::size_t ti = 0; ti < family_.size(); ++ti) {
        const VertexSet t = family_[ti].verts;
        VertexSet blue_nb = blue_neighborhood(t);
        VertexSet nb = neighborhood(g_, t);
        for (const VertexSet& d : comps) {
            if (!blue_nb.intersects(d)) continue;  // every T-D edge red (or absent)
            int a_d = alpha(g_, d);
            int a_dn = alpha(g_, d - nb);
            if (a_dn == a_d || a_dn < k) continue;
            rep.violations.push_back({static_cast<int>(ti), d,
                                      "alpha(D - N(T)) = " + std::to_string(a_dn) +
                                          " is neither alpha(D) = " + std::to_string(a_d) +
                                          " nor < k"});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

void ColoredState::color_red(const std::vector<std::pair<int, int>>& edges) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g_.vertex_count() || v >= g_.vertex_count() || !g_.has_edge(u, v))
            throw PreconditionError("color_red: not an edge of the graph");
        if (!covered_.contains(u) && !covered_.contains(v))
            throw PreconditionError("color_red: edge has no endpoint inside the family");
    }
    std::vector<std::pair<int, int>> painted;
    for (auto [u, v] : edges) paint_red(u, v, &painted);
    TraceEntry e;
    e.op = TraceOp::ColorRed;
    e.red_edges = edges;
    trace_.entries.push_back(std::move(e));
    assert_invariants();
}

void ColoredState::trace_accept_check(VertexSet x, int k, const AcceptabilityReport& rep) {
    TraceEntry e;
    e.op = TraceOp::AcceptCheck;
    e.x = x;
    e.k = k;
    e.ok = rep.ok;
    trace_.entries.push_back(std::move(e));
}

void ColoredState::trace_note(const std::string& text) {
    TraceEntry e;
    e.op = TraceOp::Note;
    e.label = text;
    trace_.entries.push_back(std::move(e));
}

void ColoredState::assert_invariants() const {
    VertexSet seen;
    for (const FamilySet& fs : family_) {
        if (fs.verts.intersects(seen)) throw InvariantViolation("family sets are not disjoint");
        seen |= fs.verts;
        if (!blue_connected_within(fs.verts))
            throw InvariantViolation("family set disconnected in the blue subgraph");
        if (fs.verts.size() > 2 * fs.ext - 1)
            throw InvariantViolation("family set larger than 2 ext(T) - 1");
        if (fs.ext > alpha(g_, fs.verts))
            throw InvariantViolation("ext(T) exceeds alpha(T)");
    }
    if (!(seen == covered_)) throw InvariantViolation("covered-set cache out of sync");
}

bool ColoredState::same_final_state(const ColoredState& o) const {
    if (!(g_ == o.g_) || red_ != o.red_) return false;
    if (family_.size() != o.family_.size()) return false;
    for (std::size_t i = 0; i < family_.size(); ++i) {
        if (!(family_[i].verts == o.family_[i].verts) || family_[i].ext != o.family_[i].ext ||
            family_[i].birth != o.family_[i].birth)
            return false;
    }
    return true;
}

ColoredState replay_trace(const Graph& g, const RunTrace& trace) {
    ColoredState s(g);
    for (const TraceEntry& e : trace.entries) {
        switch (e.op) {
            case TraceOp::Seed:
                s.add_seed_set(e.x, e.label);
                break;
            case TraceOp::Break: {
                BreakReport rep = s.break_set(e.x, e.k, e.label);
                if (rep.reddened != e.red_edges || rep.new_set_indices != e.new_set_indices)
                    throw InvariantViolation("replay: break outcome diverged from the trace");
                break;
            }
            case TraceOp::Extend: {
                ExtendReport rep = s.extend(e.t_index, e.x, e.k);
                if (!(rep.added == e.added))
                    throw InvariantViolation("replay: extend outcome diverged from the trace");
                break;
            }
            case TraceOp::ColorRed:
                s.color_red(e.red_edges);
                break;
            case TraceOp::AcceptCheck: {
                AcceptabilityReport rep = s.is_acceptable_break(e.x, e.k);
                if (rep.ok != e.ok)
                    throw InvariantViolation("replay: acceptability verdict diverged from the trace");
                s.trace_accept_check(e.x, e.k, rep);
                break;
            }
            case TraceOp::Note:
                s.trace_note(e.label);
                break;
        }
    }
    return s;
}

}  // namespace minors
