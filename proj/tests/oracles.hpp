#pragma once

// Test-only brute-force oracles, independent of the library's algorithm
// paths: subset enumeration for alpha and cliques, adjacency-list BFS for
// components, induced-cycle search for chordality.

#include <algorithm>
#include <queue>
#include <random>
#include <vector>

#include "minors/graph.hpp"

namespace oracle {

inline int alpha_bruteforce(const minors::Graph& g, minors::VertexSet s) {
    std::vector<int> verts = s.to_vector();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
                if (((mask >> i) & 1) && ((mask >> j) & 1) && g.has_edge(verts[i], verts[j])) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline int max_clique_bruteforce(const minors::Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (((mask >> i) & 1) && ((mask >> j) & 1) && !g.has_edge(i, j)) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Queue-based BFS over adjacency lists; a separate implementation from the
// library's mask walks.
inline std::vector<std::vector<int>> components_bfs(const minors::Graph& g, minors::VertexSet s) {
    std::vector<int> verts = s.to_vector();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) {
                adj[static_cast<std::size_t>(verts[i])].push_back(verts[j]);
                adj[static_cast<std::size_t>(verts[j])].push_back(verts[i]);
            }
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<std::vector<int>> comps;
    for (int v : verts) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[static_cast<std::size_t>(v)] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

// No induced cycle on >= 4 vertices (subset enumeration).
inline bool chordal_bruteforce(const minors::Graph& g) {
    int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 4) continue;
        // Induced cycle: connected and 2-regular within the subset.
        minors::VertexSet s(mask);
        bool cycle = true;
        for (int v : s)
            if ((g.neighbors(v) & s).size() != 2) {
                cycle = false;
                break;
            }
        if (cycle && minors::is_connected_within(g, s)) return false;
    }
    return true;
}

// Chordal graph built by attaching each new vertex to a random clique.
inline minors::Graph random_chordal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<minors::VertexSet> nbrs(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) {
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        minors::VertexSet clique = minors::VertexSet::single(anchor);
        minors::VertexSet cand = nbrs[static_cast<std::size_t>(anchor)] & minors::VertexSet::range(v);
        while (!cand.empty() && (rng() & 1)) {
            int pick = cand.to_vector()[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(cand.size()))];
            clique.add(pick);
            cand &= nbrs[static_cast<std::size_t>(pick)];
        }
        for (int u : clique) {
            edges.emplace_back(u, v);
            nbrs[static_cast<std::size_t>(u)].add(v);
            nbrs[static_cast<std::size_t>(v)].add(u);
        }
    }
    return minors::Graph(n, edges);
}

}  // namespace oracle
