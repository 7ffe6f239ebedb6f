#include "minors/graph.hpp"

#include <string>

namespace minors {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InvalidSetError("negative vertex count");
    if (n > 64) throw SizeError("graph has " + std::to_string(n) + " vertices; this build supports at most 64");
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidSetError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw InvalidSetError("self-loop at vertex " + std::to_string(u));
        if (!has_edge(u, v)) ++m_;
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
}

Graph Graph::from_neighborhoods(std::vector<std::uint64_t> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    if (g.n_ > 64) throw SizeError("graph has more than 64 vertices");
    VertexSet all = VertexSet::range(g.n_);
    for (int v = 0; v < g.n_; ++v) {
        VertexSet nb(adj[static_cast<std::size_t>(v)]);
        if (!nb.subset_of(all)) throw InvalidSetError("neighborhood out of range");
        if (nb.contains(v)) throw InvalidSetError("self-loop at vertex " + std::to_string(v));
        for (int u : nb) {
            if (!((adj[static_cast<std::size_t>(u)] >> v) & 1))
                throw InvalidSetError("asymmetric adjacency");
            if (u > v) ++g.m_;
        }
    }
    g.adj_ = std::move(adj);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u) - VertexSet::range(u + 1))
            out.emplace_back(u, v);
    return out;
}

void require_valid_set(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw InvalidSetError("vertex set contains vertices outside the graph");
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    VertexSet nb;
    for (int v : s) nb |= g.neighbors(v);
    return nb;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    std::vector<VertexSet> comps;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = (next & rest) - comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        rest -= comp;
    }
    return comps;
}

bool is_connected_within(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    if (s.size() <= 1) return true;
    return components(g, s).size() == 1;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    require_valid_set(g, s);
    std::vector<int> back = s.to_vector();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < back.size(); ++i)
        for (std::size_t j = i + 1; j < back.size(); ++j)
            if (g.has_edge(back[i], back[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return {Graph(static_cast<int>(back.size()), edges), back};
}

}  // namespace minors
