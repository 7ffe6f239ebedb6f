#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

// Erdos-Renyi G(n, p), deterministic for a given seed across platforms.
Graph gnp(int n, double p, std::uint64_t seed);

// Disjoint union of cliques K_{sizes[0]} + K_{sizes[1]} + ...; its
// independence number equals the number of cliques, which makes it the
// controlled-alpha test input (equivalently, the complement of a complete
// multipartite graph).
Graph disjoint_cliques(const std::vector<int>& sizes);

Graph complete(int n);
Graph edgeless(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

// All labeled graphs on n vertices whose edge set makes them connected,
// enumerated by edge-mask order.
void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& fn);

// Connected graphs on exactly n vertices up to isomorphism (n <= 10),
// generated by vertex augmentation with canonical-form deduplication.
std::vector<Graph> connected_graphs_upto_iso(int n);

// Canonical form of g (minimum upper-triangle encoding over the
// automorphism-compatible vertex orders); equal codes iff isomorphic. n <= 10.
std::uint64_t canonical_code(const Graph& g);

}  // namespace minors
