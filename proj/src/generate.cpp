#include "minors/generate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace minors {

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw PreconditionError("gnp requires n >= 0 and p in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Top 53 bits as a uniform double in [0, 1); portable across
            // standard libraries, unlike uniform_real_distribution.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

Graph disjoint_cliques(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw PreconditionError("clique sizes must be positive");
        n += s;
    }
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
        base += s;
    }
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph edgeless(int n) { return Graph(n, {}); }

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw PreconditionError("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, i + 5);                // spokes
    }
    return Graph(10, edges);
}

void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw PreconditionError("labeled enumeration supported for 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of(static_cast<std::size_t>(pairs));
    {
        int t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pair_of[static_cast<std::size_t>(t++)] = {i, j};
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::fill(adj.begin(), adj.end(), 0);
        for (std::uint64_t rest = mask; rest;) {
            int t = std::countr_zero(rest);
            rest &= rest - 1;
            auto [i, j] = pair_of[static_cast<std::size_t>(t)];
            adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
        // Connectivity over the masks before building a Graph.
        std::uint64_t seen = 1, frontier = 1;
        const std::uint64_t all = (std::uint64_t{1} << n) - 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t r = frontier; r;) {
                int v = std::countr_zero(r);
                r &= r - 1;
                next |= adj[static_cast<std::size_t>(v)];
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
        if (seen != all) continue;
        fn(Graph::from_neighborhoods(adj));
    }
}

namespace {

// 1-dimensional Weisfeiler-Lehman color refinement; returns stable colors.
std::vector<int> wl_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.neighbors(v).size();
    for (int round = 0; round < n; ++round) {
        // Signature: own color plus sorted neighbor colors.
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (int u : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
                sorted.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

std::uint64_t encode_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int bit = 0;
    int n = g.vertex_count();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                code |= std::uint64_t{1} << bit;
            ++bit;
        }
    return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 10) throw SizeError("canonical_code capped at 10 vertices");
    if (n <= 1) return 0;
    std::vector<int> color = wl_colors(g);

    // Vertices grouped by refined color; the canonical order respects the
    // color blocks, so only block-internal permutations are enumerated.
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (color[static_cast<std::size_t>(a)] != color[static_cast<std::size_t>(b)])
            return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t s = 0; s < verts.size();) {
        std::size_t e = s;
        while (e < verts.size() &&
               color[static_cast<std::size_t>(verts[e])] == color[static_cast<std::size_t>(verts[s])])
            ++e;
        blocks.emplace_back(s, e);
        s = e;
    }

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm = verts;
    // Odometer over per-block permutations.
    std::function<void(std::size_t)> walk = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            best = std::min(best, encode_under(g, perm));
            return;
        }
        auto [s, e] = blocks[bi];
        std::sort(perm.begin() + static_cast<long>(s), perm.begin() + static_cast<long>(e));
        do {
            walk(bi + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(s),
                                       perm.begin() + static_cast<long>(e)));
    };
    walk(0);
    return best;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
    if (n < 1 || n > 10) throw PreconditionError("isomorph-free enumeration supported for 1 <= n <= 10");
    // Level k holds one representative per isomorphism class of all
    // (not necessarily connected) k-vertex graphs, since deleting a vertex
    // of a connected graph may disconnect it.
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
            for (int v = 0; v < k - 1; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                for (int v = 0; v < k - 1; ++v) {
                    adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << (k - 1));
                    if ((nb >> v) & 1) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (k - 1);
                }
                adj[static_cast<std::size_t>(k - 1)] = nb;
                Graph h = Graph::from_neighborhoods(adj);
                std::uint64_t code = canonical_code(h);
                if (seen.insert(code).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const Graph& g : level)
        if (is_connected_within(g, g.vertices())) out.push_back(g);
    return out;
}

}  // namespace minors
