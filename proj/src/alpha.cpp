#include "minors/alpha.hpp"

namespace minors {
namespace {

// Number of cliques in a greedy clique cover of g[p]; an upper bound on alpha(g[p]).
int clique_cover_bound(const Graph& g, std::uint64_t p) {
    int cliques = 0;
    while (p) {
        int u = std::countr_zero(p);
        p &= p - 1;
        ++cliques;
        std::uint64_t cand = p & g.neighbors(u).bits();
        while (cand) {
            int w = std::countr_zero(cand);
            p &= ~(std::uint64_t{1} << w);
            cand &= cand - 1;
            cand &= g.neighbors(w).bits();
        }
    }
    return cliques;
}

// Branch and bound on the candidate set p. `have` is the size of the
// independent set fixed so far; `best` the best total found anywhere.
void alpha_rec(const Graph& g, std::uint64_t p, int have, int& best) {
    if (have + std::popcount(p) <= best) return;
    if (!p) {
        best = have;
        return;
    }
    if (have + clique_cover_bound(g, p) <= best) return;

    // Branch on a vertex of maximum degree inside p.
    int v = -1, vdeg = -1;
    for (std::uint64_t rest = p; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        int d = std::popcount(g.neighbors(u).bits() & p);
        if (d > vdeg) {
            vdeg = d;
            v = u;
        }
    }
    if (vdeg <= 1) {
        // Remaining graph is a matching plus isolated vertices.
        int take = 0;
        std::uint64_t rest = p;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= ~(std::uint64_t{1} << u);
            rest &= ~g.neighbors(u).bits();
            ++take;
        }
        if (have + take > best) best = have + take;
        return;
    }
    std::uint64_t vbit = std::uint64_t{1} << v;
    alpha_rec(g, p & ~(vbit | g.neighbors(v).bits()), have + 1, best);
    alpha_rec(g, p & ~vbit, have, best);
}

}  // namespace

int alpha(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    int best = 0;
    alpha_rec(g, s.bits(), 0, best);
    return best;
}

bool is_independent(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

VertexSet max_independent_set(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    int target = alpha(g, s);
    VertexSet picked;
    VertexSet rest = s;
    // Keep v exactly when a maximum independent set through picked+{v} exists.
    while (picked.size() < target) {
        int v = rest.lowest();
        VertexSet after = rest - g.neighbors(v);
        after.remove(v);
        if (picked.size() + 1 + alpha(g, after) == target) {
            picked.add(v);
            rest = after;
        } else {
            rest.remove(v);
        }
    }
    return picked;
}

VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s, VertexSet i0) {
    require_valid_set(g, s);
    if (!i0.subset_of(s)) throw PreconditionError("seed set not contained in the ambient set");
    if (!is_independent(g, i0)) throw PreconditionError("seed set is not independent");
    VertexSet out = i0;
    VertexSet blocked = neighborhood(g, i0);
    for (int v : s - i0) {
        if (blocked.contains(v)) continue;
        out.add(v);
        blocked |= g.neighbors(v);
    }
    return out;
}

}  // namespace minors
