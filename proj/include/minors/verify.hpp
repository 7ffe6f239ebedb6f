#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

// Branch sets claimed to form a complete minor; the optional 2-coloring
// turns it into an odd-minor claim.
struct MinorCertificate {
    std::vector<VertexSet> branch_sets;
    std::optional<std::vector<int>> coloring;  // per graph vertex, 0 or 1
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
};

// Sets disjoint, each connected in g, every pair joined by an edge of g.
VerifyResult verify_minor(const Graph& g, const MinorCertificate& cert);

// verify_minor plus: each branch set admits a spanning tree of bichromatic
// edges (equivalently its bichromatic subgraph is connected), and every
// pair of sets is joined by a monochromatic edge.
VerifyResult verify_odd_minor(const Graph& g, const MinorCertificate& cert);

// Exact Hadwiger number by search over connected partitions; n <= 10.
int hadwiger_bruteforce(const Graph& g);

struct ConjectureAudit {
    int alpha_h_product = 0;
    int n = 0;
    bool satisfied = true;
};

// Reports alpha(G) * h(G) against |V(G)|; n <= 10.
ConjectureAudit conjecture_audit(const Graph& g);

}  // namespace minors
