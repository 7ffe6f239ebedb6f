#include "minors/chordal.hpp"

#include <algorithm>
#include <string>

namespace minors {

ContractionMap contract_family(const Graph& g, const std::vector<std::uint64_t>& red,
                               const std::vector<FamilySet>& fam) {
    VertexSet seen;
    for (const FamilySet& fs : fam) {
        if (fs.verts.intersects(seen)) throw InvalidSetError("family sets are not disjoint");
        seen |= fs.verts;
    }
    if (!(seen == g.vertices())) throw InvalidSetError("family does not partition the vertex set");

    auto blue = [&](int v) { return g.neighbors(v) - VertexSet(red[static_cast<std::size_t>(v)]); };
    int k = static_cast<int>(fam.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        VertexSet nb;
        for (int v : fam[static_cast<std::size_t>(i)].verts) nb |= blue(v);
        for (int j = i + 1; j < k; ++j)
            if (nb.intersects(fam[static_cast<std::size_t>(j)].verts)) edges.emplace_back(i, j);
    }
    ContractionMap map{Graph(k, edges), {}};
    map.origin.reserve(fam.size());
    for (const FamilySet& fs : fam) map.origin.push_back(fs.verts);
    return map;
}

ContractionMap contract_family(const ColoredState& state) {
    return contract_family(state.graph(), state.red_adjacency(), state.family());
}

PseoResult is_pseo(const Graph& g, const std::vector<std::uint64_t>& red,
                   const std::vector<FamilySet>& fam) {
    VertexSet seen;
    for (const FamilySet& fs : fam) {
        if (fs.verts.intersects(seen)) throw InvalidSetError("family sets are not disjoint");
        seen |= fs.verts;
    }
    auto blue = [&](int v) { return g.neighbors(v) - VertexSet(red[static_cast<std::size_t>(v)]); };
    auto blue_nb = [&](VertexSet s) {
        VertexSet nb;
        for (int v : s) nb |= blue(v);
        return nb;
    };
    int k = static_cast<int>(fam.size());
    std::vector<VertexSet> nbs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) nbs[static_cast<std::size_t>(i)] = blue_nb(fam[static_cast<std::size_t>(i)].verts);

    VertexSet removed;
    for (int j = 0; j < k; ++j) {
        removed |= fam[static_cast<std::size_t>(j)].verts;
        // Components of G_b minus the first j+1 sets.
        VertexSet rest = g.vertices() - removed;
        std::vector<VertexSet> comps;
        while (!rest.empty()) {
            VertexSet comp = VertexSet::single(rest.lowest());
            VertexSet frontier = comp;
            while (!frontier.empty()) {
                VertexSet next;
                for (int v : frontier) next |= blue(v);
                frontier = (next & rest) - comp;
                comp |= frontier;
            }
            comps.push_back(comp);
            rest -= comp;
        }
        for (int i = 0; i < j; ++i) {
            const VertexSet ti = fam[static_cast<std::size_t>(i)].verts;
            const VertexSet tj = fam[static_cast<std::size_t>(j)].verts;
            bool touching = ti.intersects(tj) || nbs[static_cast<std::size_t>(i)].intersects(tj);
            if (touching) continue;
            for (const VertexSet& c : comps) {
                bool i_touch = nbs[static_cast<std::size_t>(i)].intersects(c);
                bool j_touch = nbs[static_cast<std::size_t>(j)].intersects(c);
                if (i_touch && j_touch) return {false, i, j, c};
            }
        }
    }
    return {};
}

PseoResult is_pseo(const ColoredState& state) {
    return is_pseo(state.graph(), state.red_adjacency(), state.family());
}

namespace {

// Maximum cardinality search; ties broken by smallest vertex id.
std::vector<int> mcs_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet left = h.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v : left)
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        order.push_back(best);
        left.remove(best);
        for (int v : h.neighbors(best) & left) ++weight[static_cast<std::size_t>(v)];
    }
    return order;
}

bool earlier_neighbors_form_cliques(const Graph& h, const std::vector<int>& order, int* bad_pos) {
    VertexSet earlier;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        int v = order[pos];
        VertexSet back = h.neighbors(v) & earlier;
        for (int a : back)
            if (!back.subset_of(h.neighbors(a) | VertexSet::single(a))) {
                if (bad_pos) *bad_pos = static_cast<int>(pos);
                return false;
            }
        earlier.add(v);
    }
    return true;
}

// Finds some induced cycle of length >= 4; the graph is known non-chordal.
std::vector<int> find_hole(const Graph& h) {
    int n = h.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet nb = h.neighbors(v);
        for (int u : nb)
            for (int w : nb - VertexSet::range(u + 1)) {
                if (h.has_edge(u, w)) continue;
                // Shortest u-w path avoiding N[v] except at the endpoints
                // closes an induced cycle through v.
                VertexSet allowed = (h.vertices() - nb - VertexSet::single(v)) |
                                    VertexSet::of({u, w});
                std::vector<int> prev(static_cast<std::size_t>(n), -1);
                VertexSet seenv = VertexSet::single(u);
                VertexSet layer = seenv;
                bool reached = false;
                while (!layer.empty() && !reached) {
                    VertexSet next;
                    for (int a : layer)
                        for (int b : (h.neighbors(a) & allowed) - seenv) {
                            prev[static_cast<std::size_t>(b)] = a;
                            next.add(b);
                        }
                    seenv |= next;
                    layer = next;
                    if (seenv.contains(w)) reached = true;
                }
                if (!reached) continue;
                std::vector<int> path;
                for (int cur = w; cur != -1; cur = prev[static_cast<std::size_t>(cur)]) path.push_back(cur);
                // Shortest path is induced, and no inner vertex neighbors v.
                path.push_back(v);
                return path;
            }
    }
    throw InvariantViolation("hole search failed on a non-chordal graph");
}

}  // namespace

ChordalityResult is_chordal(const Graph& h) {
    std::vector<int> order = mcs_order(h);
    if (earlier_neighbors_form_cliques(h, order, nullptr)) return {true, {order}, {}};
    return {false, {}, find_hole(h)};
}

VertexSet max_clique_chordal(const Graph& h, const EliminationOrder& order) {
    int n = h.vertex_count();
    if (static_cast<int>(order.order.size()) != n) throw PreconditionError("elimination order has wrong length");
    VertexSet check;
    for (int v : order.order) {
        if (v < 0 || v >= n || check.contains(v)) throw PreconditionError("not a permutation of the vertices");
        check.add(v);
    }
    if (!earlier_neighbors_form_cliques(h, order.order, nullptr))
        throw PreconditionError("not a simplicial elimination ordering");

    VertexSet best;
    VertexSet earlier;
    for (int v : order.order) {
        VertexSet clique = (h.neighbors(v) & earlier) | VertexSet::single(v);
        if (clique.size() > best.size()) best = clique;
        earlier.add(v);
    }
    return best;
}

namespace {

void alpha_w_rec(const Graph& h, VertexSet pool, const std::vector<Rat>& w, Rat have, Rat& best) {
    Rat slack(0);
    for (int v : pool) slack += w[static_cast<std::size_t>(v)];
    if (have + slack <= best) return;
    if (pool.empty()) {
        best = have;
        return;
    }
    int v = pool.lowest();
    alpha_w_rec(h, pool - h.neighbors(v) - VertexSet::single(v), w,
                have + w[static_cast<std::size_t>(v)], best);
    alpha_w_rec(h, pool - VertexSet::single(v), w, have, best);
}

}  // namespace

Rat alpha_weighted_bruteforce(const Graph& h, const std::vector<Rat>& weights, int cap) {
    if (h.vertex_count() > cap)
        throw SizeError("weighted independence brute force capped at " + std::to_string(cap) + " vertices");
    if (static_cast<int>(weights.size()) != h.vertex_count())
        throw PreconditionError("one weight per vertex required");
    for (const Rat& r : weights)
        if (r <= Rat(0)) throw PreconditionError("weights must be positive");
    Rat best(0);
    alpha_w_rec(h, h.vertices(), weights, Rat(0), best);
    return best;
}

long long perfect_weight_bound(const Graph& h, const std::vector<Rat>& weights, int cap) {
    if (!is_chordal(h).ok) throw PreconditionError("perfect_weight_bound requires a chordal graph");
    Rat total(0);
    for (const Rat& r : weights) total += r;
    Rat aw = alpha_weighted_bruteforce(h, weights, cap);
    Rat q = total / aw;
    long long c = q.numerator() / q.denominator();
    if (Rat(c) < q) ++c;
    return c;
}

}  // namespace minors
