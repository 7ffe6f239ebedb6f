#include "minors/drivers.hpp"

#include <algorithm>
#include <set>

#include "minors/alpha.hpp"
#include "minors/bounds.hpp"

namespace minors {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Runs the acceptability check, records the verdict, executes the breaking.
// Every breaking the drivers perform must be acceptable.
void checked_break(ColoredState& st, VertexSet x, int k, const std::string& label) {
    AcceptabilityReport rep = st.is_acceptable_break(x, k);
    st.trace_accept_check(x, k, rep);
    if (!rep.ok) throw InvariantViolation("driver attempted an unacceptable breaking (" + label + ")");
    st.break_set(x, k, label);
}

// Contraction, chordality, clique extraction, certificate verification.
RunResult finish(ColoredState&& st, const std::string& alg, int guaranteed,
                 std::vector<std::string> flags) {
    if (!(st.covered() == st.graph().vertices()))
        throw InvariantViolation("driver finished without partitioning the graph");
    PseoResult pseo = is_pseo(st);
    if (!pseo.ok) throw InvariantViolation("final family is not a partial simplicial elimination ordering");
    ContractionMap cm = contract_family(st);
    ChordalityResult ch = is_chordal(cm.h);
    if (!ch.ok) throw InvariantViolation("contracted graph is not chordal");
    VertexSet clique = max_clique_chordal(cm.h, ch.order);

    MinorCertificate cert;
    for (int hv : clique) cert.branch_sets.push_back(cm.origin[static_cast<std::size_t>(hv)]);
    VerifyResult vr = verify_minor(st.graph(), cert);
    if (!vr.ok) throw InvariantViolation("emitted certificate failed verification: " + vr.reason);

    RunResult out{std::move(st), std::move(cm), std::move(cert), guaranteed, clique.size(), alg,
                  std::move(flags)};
    if (out.achieved_size < out.guaranteed_size)
        throw InvariantViolation("achieved minor smaller than the guarantee");
    return out;
}

}  // namespace

RunResult run_dm2(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("run_dm2: empty graph");
    const int n = g.vertex_count();
    const int a = alpha(g, g.vertices());
    ColoredState st(g);

    if (a == 1) {
        checked_break(st, g.vertices(), 1, "dm2.k1");
    } else if (a == 2) {
        checked_break(st, g.vertices(), 2, "dm2.k2");
        if (!st.uncovered().empty()) checked_break(st, st.uncovered(), 1, "dm2.k1");
    } else {
        while (!st.uncovered().empty()) {
            VertexSet c = components(g, st.uncovered()).front();
            int ac = alpha(g, c);
            if (ac == 1) {
                checked_break(st, c, 1, "dm2.k1");
            } else if (ac == 2) {
                checked_break(st, c, 2, "dm2.k2");
                VertexSet residual = c & st.uncovered();
                if (!residual.empty()) checked_break(st, residual, 1, "dm2.k1");
            } else {
                checked_break(st, c, ac - 1, "dm2.k" + std::to_string(ac - 1));
            }
        }
    }

    int guaranteed = (a == 1) ? n : (a == 2 ? ceil_div(n, 3) : ceil_div(n, 2 * a - 2));
    return finish(std::move(st), "dm2", guaranteed, {});
}

RunResult run_log(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("run_log: empty graph");
    const int n = g.vertex_count();
    const int ag = alpha(g, g.vertices());
    ColoredState st(g);
    std::vector<std::string> flags;

    while (!st.uncovered().empty()) {
        const VertexSet before = st.covered();
        VertexSet c = components(g, st.uncovered()).front();
        int ac = alpha(g, c);
        if (ac == 1) {
            checked_break(st, c, 1, "log.k1");
            continue;
        }

        // Substep 1. The coloring pass is the breaking of C by alpha(C)+1:
        // step (a) reddens exactly the fully-avoidable pairs and step (b)
        // cannot produce sets.
        checked_break(st, c, ac + 1, "log.s1");
        const int b = (ac + 2) / 2;  // ceil((alpha(C)+1)/2)

        // Classify the family against C: 0 = all edges red (or none),
        // 1 = alpha(C - N(T)) < sqrt2 (b-1), 2 = the rest.
        std::vector<int> cls(st.family().size(), 0);
        for (std::size_t ti = 0; ti < st.family().size(); ++ti) {
            const VertexSet t = st.family()[ti].verts;
            if (!st.blue_neighborhood(t).intersects(c)) {
                cls[ti] = 0;
                continue;
            }
            int acn = alpha(g, c - neighborhood(g, t));
            cls[ti] = (acn * acn < 2 * (b - 1) * (b - 1)) ? 1 : 2;
        }

        VertexSet a_set = c;
        std::set<std::size_t> extended;
        bool early_exit = false;
        for (int pass : {1, 2}) {
            // Fixpoint: extend while some (T, D) pair qualifies; rescan from
            // the top after every extension.
            while (true) {
                bool found = false;
                auto comps = components(g, a_set);
                for (std::size_t ti = 0; ti < cls.size() && !found; ++ti) {
                    if (cls[ti] != pass) continue;
                    const VertexSet t = st.family()[ti].verts;
                    VertexSet nb = neighborhood(g, t);
                    for (const VertexSet& d : comps) {
                        int adn = alpha(g, d - nb);
                        if (adn < b || adn >= alpha(g, d)) continue;
                        st.extend(static_cast<int>(ti), d, adn - b + 1);
                        extended.insert(ti);
                        a_set -= st.family()[ti].verts;
                        found = true;
                        break;
                    }
                }
                if (!found) break;
            }
            if (pass == 1) {
                // A skipped H1 set that still fully avoids some component
                // ends this step before Substeps 3 and 4.
                auto comps = components(g, a_set);
                for (std::size_t ti = 0; ti < cls.size() && !early_exit; ++ti) {
                    if (cls[ti] != 1 || extended.count(ti)) continue;
                    VertexSet nb = neighborhood(g, st.family()[ti].verts);
                    for (const VertexSet& d : comps) {
                        int adn = alpha(g, d - nb);
                        if (adn >= b && adn == alpha(g, d)) {
                            early_exit = true;
                            st.trace_note("step finished before substep 3: unextended class-1 set fully avoids a component");
                            break;
                        }
                    }
                }
                if (early_exit) break;
            }
        }
        if (!early_exit && !a_set.empty()) checked_break(st, a_set, b, "log.s4");

        if (st.covered() == before) throw InvariantViolation("run_log: step made no progress");
    }

    int guaranteed = ceil_div(n, 2 * ag - f_eval(Q2(0, 2 * ag)));
    return finish(std::move(st), "log", guaranteed, std::move(flags));
}

namespace {

using Words = std::vector<std::uint64_t>;

// Exact maximum clique search with the greedy-coloring bound (Tomita style)
// on the candidate compatibility graph; rows are dynamic bitsets.
struct FamilySearch {
    int m = 0;
    int words = 0;
    std::vector<Words> adj;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    std::vector<int> best, cur;

    bool empty_set(const Words& s) const {
        for (std::uint64_t w : s)
            if (w) return false;
        return true;
    }

    void expand(const Words& p) {
        if (++nodes > budget)
            throw BudgetExceededError("maximum-family search exceeded its node budget");
        if (empty_set(p)) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // Greedy coloring: fill color classes with pairwise-incompatible
        // candidates; a candidate's class index bounds any clique through it.
        std::vector<int> order, color;
        Words rest = p;
        int c = 0;
        while (!empty_set(rest)) {
            ++c;
            Words avail = rest;
            for (int w = 0; w < words; ++w)
                while (avail[static_cast<std::size_t>(w)]) {
                    int v = (w << 6) + std::countr_zero(avail[static_cast<std::size_t>(w)]);
                    order.push_back(v);
                    color.push_back(c);
                    rest[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
                    avail[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
                    for (int ww = w; ww < words; ++ww)
                        avail[static_cast<std::size_t>(ww)] &=
                            ~adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(ww)];
                }
        }
        Words live = p;
        for (std::size_t i = order.size(); i-- > 0;) {
            int v = order[i];
            if (cur.size() + static_cast<std::size_t>(color[i]) <= best.size()) return;
            Words next(static_cast<std::size_t>(words));
            for (int w = 0; w < words; ++w)
                next[static_cast<std::size_t>(w)] =
                    live[static_cast<std::size_t>(w)] &
                    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            cur.push_back(v);
            expand(next);
            cur.pop_back();
            live[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        }
    }
};

}  // namespace

std::vector<VertexSet> max_touching_family(const Graph& g, std::uint64_t budget) {
    // Candidate shapes with alpha(T) <= 2 and |T| <= 2 alpha(T) - 1 and G[T]
    // connected are exactly singletons and induced three-vertex paths.
    std::vector<VertexSet> cand;
    for (int v = 0; v < g.vertex_count(); ++v) cand.push_back(VertexSet::single(v));
    for (int w = 0; w < g.vertex_count(); ++w) {
        VertexSet nb = g.neighbors(w);
        for (int u : nb)
            for (int v : nb - VertexSet::range(u + 1))
                if (!g.has_edge(u, v)) cand.push_back(VertexSet::of({u, w, v}));
    }

    const int m = static_cast<int>(cand.size());
    std::vector<VertexSet> nbs(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) nbs[i] = neighborhood(g, cand[i]);
    auto compatible = [&](std::size_t i, std::size_t j) {
        return !cand[i].intersects(cand[j]) && nbs[i].intersects(cand[j]);
    };

    // Candidates reordered by descending compatibility degree (stable) for
    // better greedy colorings; ties keep the canonical candidate order.
    std::vector<int> deg(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (compatible(i, j)) {
                ++deg[i];
                ++deg[j];
            }
    std::vector<int> perm(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) perm[i] = static_cast<int>(i);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });

    FamilySearch fs;
    fs.m = m;
    fs.words = (m + 63) / 64;
    fs.budget = budget;
    fs.adj.assign(static_cast<std::size_t>(m), Words(static_cast<std::size_t>(fs.words), 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (compatible(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]),
                           static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]))) {
                fs.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j >> 6)] |=
                    std::uint64_t{1} << (j & 63);
                fs.adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i >> 6)] |=
                    std::uint64_t{1} << (i & 63);
            }

    // Greedy family as the initial lower bound.
    for (int i = 0; i < m; ++i) {
        bool ok = true;
        for (int v : fs.cur)
            if (!((fs.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1)) {
                ok = false;
                break;
            }
        if (ok) fs.cur.push_back(i);
    }
    fs.best = fs.cur;
    fs.cur.clear();

    Words all(static_cast<std::size_t>(fs.words), 0);
    for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    fs.expand(all);

    std::vector<int> picks;
    for (int i : fs.best) picks.push_back(perm[static_cast<std::size_t>(i)]);
    std::sort(picks.begin(), picks.end());
    std::vector<VertexSet> out;
    for (int i : picks) out.push_back(cand[static_cast<std::size_t>(i)]);
    return out;
}

namespace {

// Fixpoint extension pass shared by the alpha = 5 cases: extend qualifying
// (T, component) pairs by 1 until none qualify. Pairs whose edges are all
// red are skipped; they already satisfy the acceptability trichotomy.
void alpha5_fixpoint(ColoredState& st, int comp_alpha, int reduced_alpha, bool only_alpha2_sets) {
    const Graph& g = st.graph();
    while (true) {
        bool found = false;
        auto comps = components(g, st.uncovered());
        for (std::size_t ti = 0; ti < st.family().size() && !found; ++ti) {
            const VertexSet t = st.family()[ti].verts;
            if (only_alpha2_sets && alpha(g, t) != 2) continue;
            VertexSet nb = neighborhood(g, t);
            VertexSet blue_nb = st.blue_neighborhood(t);
            for (const VertexSet& d : comps) {
                if (alpha(g, d) != comp_alpha) continue;
                if (alpha(g, d - nb) != reduced_alpha) continue;
                if (!blue_nb.intersects(d)) continue;  // fully red pair
                st.extend(static_cast<int>(ti), d, 1);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
}

void break_if_any(ColoredState& st, int k, const std::string& label) {
    if (!st.uncovered().empty()) checked_break(st, st.uncovered(), k, label);
}

}  // namespace

RunResult run_alpha5(const Graph& g, const Alpha5Options& opt) {
    if (g.vertex_count() == 0) throw PreconditionError("run_alpha5: empty graph");
    if (alpha(g, g.vertices()) != 5) throw PreconditionError("run_alpha5 requires alpha(G) = 5");
    ColoredState st(g);
    std::vector<std::string> flags;

    // Step 1: maximum pairwise-touching family.
    for (const VertexSet& s : max_touching_family(g, opt.step1_budget)) st.add_seed_set(s, "1");
    const std::size_t step1_count = st.family().size();

    // Step 2: push each singleton into a touched, not dominated component.
    for (std::size_t ti = 0; ti < step1_count; ++ti) {
        if (st.family()[ti].verts.size() != 1) continue;
        VertexSet u = st.uncovered();
        if (u.empty()) break;
        VertexSet nb = neighborhood(g, st.family()[ti].verts);
        for (const VertexSet& comp : components(g, u)) {
            if (!nb.intersects(comp)) continue;       // does not touch
            if ((comp - nb).empty()) continue;        // dominates
            st.extend(static_cast<int>(ti), comp, 1);
            break;
        }
    }

    // Case selection on G[U].
    int max_comp_alpha = 0;
    auto u2_comps = components(g, st.uncovered());
    for (const VertexSet& comp : u2_comps) max_comp_alpha = std::max(max_comp_alpha, alpha(g, comp));

    if (max_comp_alpha == 5) {
        flags.push_back("case:III");
        if (u2_comps.size() != 1) {
            // The three cases do not cover a disconnected U with a full
            // independence-number component; the Case III steps still apply.
            flags.push_back("case_iii_fallback");
            st.trace_note("case III fallback: U disconnected with an alpha-5 component");
        }
        break_if_any(st, 4, "III.3");
        alpha5_fixpoint(st, 3, 2, /*only_alpha2_sets=*/true);
        break_if_any(st, 2, "III.5");
        break_if_any(st, 1, "III.6");
    } else if (max_comp_alpha == 4) {
        flags.push_back("case:I");
        alpha5_fixpoint(st, 4, 3, /*only_alpha2_sets=*/false);
        break_if_any(st, 3, "I.4");
        break_if_any(st, 2, "I.5");
        break_if_any(st, 1, "I.6");
    } else {
        flags.push_back("case:II");
        alpha5_fixpoint(st, 3, 2, /*only_alpha2_sets=*/false);
        break_if_any(st, 2, "II.4");
        break_if_any(st, 1, "II.5");
    }

    int guaranteed = ceil_div(5 * g.vertex_count(), 38);
    return finish(std::move(st), "alpha5", guaranteed, std::move(flags));
}

}  // namespace minors
