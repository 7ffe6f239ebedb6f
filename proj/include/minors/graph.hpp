#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "minors/errors.hpp"

namespace minors {

// Subset of the vertices 0..63, canonical order = ascending vertex id.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // The full set {0, ..., n-1}.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Smallest member; set must be nonempty.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Iterates members in ascending order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits_}; }
    iterator end() const { return {0}; }

private:
    std::uint64_t bits_ = 0;
};

// Immutable undirected simple graph on vertices 0..n-1, n <= 64.
// Adjacency is stored as one neighborhood mask per vertex.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    // Builds from per-vertex neighborhood masks (validated: symmetric,
    // no self-loops, in range).
    static Graph from_neighborhoods(std::vector<std::uint64_t> adj);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    // Open neighborhood N(v).
    VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Throws InvalidSetError unless s is a subset of g's vertices.
void require_valid_set(const Graph& g, VertexSet s);

// Union of open neighborhoods of the members of s; may intersect s.
VertexSet neighborhood(const Graph& g, VertexSet s);

// Connected components of g[s], ordered by smallest contained vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet s);

// True when g[s] is connected (the empty and singleton sets count as connected).
bool is_connected_within(const Graph& g, VertexSet s);

// g[s] relabeled to 0..|s|-1 plus the map from new ids back to vertices of g.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

}  // namespace minors
