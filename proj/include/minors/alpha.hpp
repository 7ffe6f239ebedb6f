#pragma once

#include "minors/graph.hpp"

namespace minors {

// Exact maximum independent set size in g[s]; alpha(empty) = 0.
int alpha(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);

// Lexicographically smallest maximum independent set of g[s]
// (sets compared by their ascending vertex sequences).
VertexSet max_independent_set(const Graph& g, VertexSet s);

// Maximal independent set of g[s] containing i0, grown greedily in
// ascending vertex order. Throws PreconditionError when i0 is not
// independent or not contained in s.
VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s, VertexSet i0);

}  // namespace minors
