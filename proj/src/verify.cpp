#include "minors/verify.hpp"

#include <string>

#include "minors/alpha.hpp"

namespace minors {

namespace {

std::string set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

VerifyResult verify_minor(const Graph& g, const MinorCertificate& cert) {
    VertexSet seen;
    for (const VertexSet& s : cert.branch_sets) {
        if (!s.subset_of(g.vertices())) return {false, "branch set " + set_str(s) + " outside the graph"};
        if (s.empty()) return {false, "empty branch set"};
        if (s.intersects(seen)) return {false, "branch sets overlap at " + set_str(s & seen)};
        seen |= s;
        if (!is_connected_within(g, s)) return {false, "branch set " + set_str(s) + " is disconnected"};
    }
    for (std::size_t i = 0; i < cert.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < cert.branch_sets.size(); ++j) {
            if (!neighborhood(g, cert.branch_sets[i]).intersects(cert.branch_sets[j]))
                return {false, "no edge between branch sets " + set_str(cert.branch_sets[i]) +
                                   " and " + set_str(cert.branch_sets[j])};
        }
    return {};
}

VerifyResult verify_odd_minor(const Graph& g, const MinorCertificate& cert) {
    if (!cert.coloring) throw PreconditionError("odd-minor verification needs a 2-coloring");
    const std::vector<int>& col = *cert.coloring;
    if (static_cast<int>(col.size()) != g.vertex_count())
        throw PreconditionError("coloring must assign every vertex 0 or 1");
    for (int c : col)
        if (c != 0 && c != 1) throw PreconditionError("coloring values must be 0 or 1");

    VerifyResult base = verify_minor(g, cert);
    if (!base.ok) return base;

    // A spanning tree of bichromatic edges exists iff the bichromatic
    // subgraph of g[T] is connected and spans T.
    for (const VertexSet& s : cert.branch_sets) {
        VertexSet comp = VertexSet::single(s.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                for (int u : g.neighbors(v) & s)
                    if (col[static_cast<std::size_t>(u)] != col[static_cast<std::size_t>(v)]) next.add(u);
            frontier = next - comp;
            comp |= frontier;
        }
        if (!(comp == s))
            return {false, "branch set " + set_str(s) + " has no bichromatic spanning tree"};
    }
    for (std::size_t i = 0; i < cert.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < cert.branch_sets.size(); ++j) {
            bool mono = false;
            for (int v : cert.branch_sets[i]) {
                for (int u : g.neighbors(v) & cert.branch_sets[j])
                    if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
                        mono = true;
                        break;
                    }
                if (mono) break;
            }
            if (!mono)
                return {false, "no monochromatic edge between branch sets " +
                                   set_str(cert.branch_sets[i]) + " and " + set_str(cert.branch_sets[j])};
        }
    return {};
}

namespace {

// Max number of blocks over partitions of `verts` into connected,
// pairwise-adjacent blocks. Vertices are assigned in ascending order to an
// existing block or a fresh one.
struct HadwigerSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<VertexSet> blocks;
    int best = 0;

    explicit HadwigerSearch(const Graph& gg, VertexSet verts) : g(gg), order(verts.to_vector()) {}

    void run(std::size_t pos) {
        if (pos == order.size()) {
            finish();
            return;
        }
        int v = order[pos];
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].add(v);
            run(pos + 1);
            blocks[b].remove(v);
        }
        blocks.push_back(VertexSet::single(v));
        run(pos + 1);
        blocks.pop_back();
    }

    void finish() {
        if (static_cast<int>(blocks.size()) <= best) return;
        for (const VertexSet& b : blocks)
            if (!is_connected_within(g, b)) return;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if (!neighborhood(g, blocks[i]).intersects(blocks[j])) return;
        best = static_cast<int>(blocks.size());
    }
};

}  // namespace

int hadwiger_bruteforce(const Graph& g) {
    if (g.vertex_count() > 10) throw SizeError("hadwiger_bruteforce capped at 10 vertices");
    if (g.vertex_count() == 0) return 0;
    // Branch sets of a complete minor live in one component, and within a
    // connected graph a maximum witness extends to a partition.
    int best = 0;
    for (const VertexSet& comp : components(g, g.vertices())) {
        HadwigerSearch search(g, comp);
        search.run(0);
        best = std::max(best, search.best);
    }
    return best;
}

ConjectureAudit conjecture_audit(const Graph& g) {
    int h = hadwiger_bruteforce(g);
    int a = alpha(g, g.vertices());
    return {a * h, g.vertex_count(), a * h >= g.vertex_count()};
}

}  // namespace minors
