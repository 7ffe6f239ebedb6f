#include "minors/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "minors/alpha.hpp"
#include "minors/bounds.hpp"
#include "minors/chordal.hpp"
#include "minors/generate.hpp"
#include "minors/io.hpp"
#include "minors/verify.hpp"

namespace minors {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

GeneratorSpec parse_generator(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    std::string rest = (colon == std::string::npos) ? "" : text.substr(colon + 1);
    if (spec.kind == "gnp") {
        for (const std::string& kv : split(rest, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw PreconditionError("gnp expects key=value pairs: " + kv);
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "n") spec.n = std::stoi(val);
            else if (key == "p") spec.p = std::stod(val);
            else if (key == "seed") spec.seed = std::stoull(val);
            else if (key == "count") spec.count = std::stoi(val);
            else throw PreconditionError("unknown gnp parameter: " + key);
        }
    } else if (spec.kind == "cliques") {
        for (const std::string& s : split(rest, ',')) spec.sizes.push_back(std::stoi(s));
    } else if (spec.kind == "cycle" || spec.kind == "complete" || spec.kind == "edgeless" ||
               spec.kind == "path") {
        spec.n = std::stoi(rest);
    } else if (spec.kind == "petersen") {
        // no parameters
    } else if (spec.kind == "file") {
        spec.path = rest;
    } else if (spec.kind == "g6") {
        spec.text = rest;
    } else {
        throw PreconditionError("unknown generator kind: " + spec.kind);
    }
    return spec;
}

std::vector<Graph> generate(const GeneratorSpec& spec) {
    if (spec.kind == "gnp") {
        std::vector<Graph> out;
        for (int i = 0; i < spec.count; ++i) out.push_back(gnp(spec.n, spec.p, spec.seed + static_cast<std::uint64_t>(i)));
        return out;
    }
    if (spec.kind == "cliques") return {disjoint_cliques(spec.sizes)};
    if (spec.kind == "cycle") return {cycle(spec.n)};
    if (spec.kind == "complete") return {complete(spec.n)};
    if (spec.kind == "edgeless") return {edgeless(spec.n)};
    if (spec.kind == "path") return {path(spec.n)};
    if (spec.kind == "petersen") return {petersen()};
    if (spec.kind == "g6") return {parse_graph6(spec.text)};
    if (spec.kind == "file") {
        std::ifstream in(spec.path);
        if (!in) throw Error("cannot open " + spec.path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string data = buf.str();
        if (data.find("p edge") != std::string::npos) return {parse_dimacs(data)};
        std::vector<Graph> out;
        for (const std::string& line : split(data, '\n'))
            if (!line.empty()) out.push_back(parse_graph6(line));
        return out;
    }
    throw PreconditionError("unknown generator kind: " + spec.kind);
}

namespace {

const char* op_name(TraceOp op) {
    switch (op) {
        case TraceOp::Seed: return "seed";
        case TraceOp::Break: return "break";
        case TraceOp::Extend: return "extend";
        case TraceOp::ColorRed: return "color_red";
        case TraceOp::AcceptCheck: return "accept_check";
        case TraceOp::Note: return "note";
    }
    return "?";
}

TraceOp op_from_name(const std::string& s) {
    if (s == "seed") return TraceOp::Seed;
    if (s == "break") return TraceOp::Break;
    if (s == "extend") return TraceOp::Extend;
    if (s == "color_red") return TraceOp::ColorRed;
    if (s == "accept_check") return TraceOp::AcceptCheck;
    if (s == "note") return TraceOp::Note;
    throw ParseError("unknown trace op: " + s, 0);
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

}  // namespace

std::string trace_to_json(const RunTrace& trace) {
    json entries = json::array();
    for (const TraceEntry& e : trace.entries) {
        json j;
        j["op"] = op_name(e.op);
        switch (e.op) {
            case TraceOp::Seed:
                j["x"] = e.x.to_vector();
                j["label"] = e.label;
                break;
            case TraceOp::Break:
                j["x"] = e.x.to_vector();
                j["k"] = e.k;
                j["label"] = e.label;
                j["red_edges"] = edges_json(e.red_edges);
                j["new_sets"] = e.new_set_indices;
                break;
            case TraceOp::Extend:
                j["t"] = e.t_index;
                j["x"] = e.x.to_vector();
                j["k"] = e.k;
                j["added"] = e.added.to_vector();
                break;
            case TraceOp::ColorRed:
                j["red_edges"] = edges_json(e.red_edges);
                break;
            case TraceOp::AcceptCheck:
                j["x"] = e.x.to_vector();
                j["k"] = e.k;
                j["ok"] = e.ok;
                break;
            case TraceOp::Note:
                j["text"] = e.label;
                break;
        }
        entries.push_back(std::move(j));
    }
    json doc;
    doc["schema_version"] = 1;
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

namespace {

VertexSet set_from_json(const json& arr) {
    VertexSet s;
    for (int v : arr.get<std::vector<int>>()) s.add(v);
    return s;
}

std::vector<std::pair<int, int>> edges_from_json(const json& arr) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : arr) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

}  // namespace

RunTrace trace_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != 1) throw ParseError("unsupported trace schema", 0);
    RunTrace trace;
    for (const json& j : doc.at("entries")) {
        TraceEntry e;
        e.op = op_from_name(j.at("op").get<std::string>());
        switch (e.op) {
            case TraceOp::Seed:
                e.x = set_from_json(j.at("x"));
                e.label = j.at("label").get<std::string>();
                break;
            case TraceOp::Break:
                e.x = set_from_json(j.at("x"));
                e.k = j.at("k").get<int>();
                e.label = j.at("label").get<std::string>();
                e.red_edges = edges_from_json(j.at("red_edges"));
                e.new_set_indices = j.at("new_sets").get<std::vector<int>>();
                break;
            case TraceOp::Extend:
                e.t_index = j.at("t").get<int>();
                e.x = set_from_json(j.at("x"));
                e.k = j.at("k").get<int>();
                e.added = set_from_json(j.at("added"));
                break;
            case TraceOp::ColorRed:
                e.red_edges = edges_from_json(j.at("red_edges"));
                break;
            case TraceOp::AcceptCheck:
                e.x = set_from_json(j.at("x"));
                e.k = j.at("k").get<int>();
                e.ok = j.at("ok").get<bool>();
                break;
            case TraceOp::Note:
                e.label = j.at("text").get<std::string>();
                break;
        }
        trace.entries.push_back(std::move(e));
    }
    return trace;
}

std::string trace_hash(const RunTrace& trace) {
    // FNV-1a over the serialized trace.
    std::string data = trace_to_json(trace);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::vector<Rat> size_weights(const RunResult& r) {
    std::vector<Rat> w;
    for (const VertexSet& s : r.contraction.origin) w.emplace_back(s.size());
    return w;
}

bool has_flag(const RunResult& r, const std::string& f) {
    for (const std::string& s : r.flags)
        if (s == f) return true;
    return false;
}

void weight_audits(const Graph& g, const RunResult& r, std::vector<RecordAudit>& out) {
    const Graph& h = r.contraction.h;
    if (h.vertex_count() > 22) {
        out.push_back({"weights", true, "skipped: |V(H)| > 22"});
        return;
    }
    const int ag = alpha(g, g.vertices());

    // omega(H) >= ceil(n / alpha_w(H)) with contraction-size weights.
    Rat aw = alpha_weighted_bruteforce(h, size_weights(r));
    long long need = perfect_weight_bound(h, size_weights(r));
    out.push_back({"theorem3_weight_bound", r.achieved_size >= need,
                   "omega = " + std::to_string(r.achieved_size) + ", bound = " + std::to_string(need)});

    if (r.algorithm == "dm2" && ag == 2) {
        out.push_back({"dm2_alpha2_weight", aw <= Rat(3),
                       "alpha_w(H) = " + std::to_string(aw.numerator()) + "/" +
                           std::to_string(aw.denominator())});
    }
    if (r.algorithm == "log") {
        long long cap = 2 * ag - f_eval(Q2(0, 2 * ag));
        out.push_back({"log_weight_cap", aw <= Rat(cap),
                       "alpha_w(H) vs 2a - f(2sqrt2 a) = " + std::to_string(cap)});
    }
    if (r.algorithm == "alpha5") {
        const auto& fam = r.state.family();
        if (has_flag(r, "case:III")) {
            std::vector<Rat> cw;
            bool classified = true;
            for (const FamilySet& fs : fam) {
                long long w = 0;
                if (fs.birth == "1" && fs.ext == 1) w = 38;
                else if (fs.birth == "1" && fs.ext == 2) w = 21;
                else if (fs.birth == "1" && fs.ext == 3) w = 32;
                else if (fs.birth == "III.3") w = 35;
                else if (fs.birth == "III.5") w = 14;
                else if (fs.birth == "III.6") w = 3;
                else classified = false;
                cw.emplace_back(w);
            }
            if (!classified) {
                out.push_back({"alpha5_class_weights", false, "unclassifiable family set"});
            } else {
                Rat acw = alpha_weighted_bruteforce(h, cw);
                out.push_back({"alpha5_class_weights", acw <= Rat(38),
                               "class-weighted alpha_w = " + std::to_string(acw.numerator())});
            }
            // Size+1 weights on the twice/thrice-extended step-1 sets.
            std::vector<Rat> sw;
            for (const FamilySet& fs : fam)
                sw.emplace_back(fs.verts.size() + ((fs.birth == "1" && fs.ext >= 2) ? 1 : 0));
            out.push_back({"alpha5_sizeplus_weights",
                           alpha_weighted_bruteforce(h, sw) <= Rat(8), "cap 8"});
        } else {
            std::vector<Rat> sw;
            for (const FamilySet& fs : fam)
                sw.emplace_back(fs.verts.size() - ((fs.birth == "1" && fs.ext == 3) ? 1 : 0));
            out.push_back({"alpha5_caseI_II_weights",
                           alpha_weighted_bruteforce(h, sw) <= Rat(7), "cap 7"});
        }
    }
}

}  // namespace

std::vector<RecordAudit> audit_run(const Graph& g, const RunResult& r, AuditLevel level) {
    std::vector<RecordAudit> out;
    VerifyResult vr = verify_minor(g, r.minor);
    out.push_back({"certificate", vr.ok, vr.reason});
    out.push_back({"guarantee", r.achieved_size >= r.guaranteed_size,
                   std::to_string(r.achieved_size) + " >= " + std::to_string(r.guaranteed_size)});
    if (level == AuditLevel::None) return out;

    out.push_back({"partition", r.state.covered() == g.vertices(), ""});
    PseoResult pseo = is_pseo(r.state);
    out.push_back({"pseo", pseo.ok, pseo.ok ? "" : "witness pair " + std::to_string(pseo.i) + "," + std::to_string(pseo.j)});
    out.push_back({"chordal", is_chordal(r.contraction.h).ok, ""});
    bool accepts_ok = true;
    int breaks = 0, checks = 0;
    for (const TraceEntry& e : r.state.trace().entries) {
        if (e.op == TraceOp::Break) ++breaks;
        if (e.op == TraceOp::AcceptCheck) {
            ++checks;
            accepts_ok = accepts_ok && e.ok;
        }
    }
    out.push_back({"acceptability", accepts_ok && checks >= breaks,
                   std::to_string(checks) + " checks for " + std::to_string(breaks) + " breaks"});
    if (level == AuditLevel::Fast) return out;

    try {
        ColoredState re = replay_trace(g, r.state.trace());
        out.push_back({"replay", re.same_final_state(r.state) && re.trace() == r.state.trace(), ""});
    } catch (const Error& e) {
        out.push_back({"replay", false, e.what()});
    }
    weight_audits(g, r, out);
    if (g.vertex_count() <= 10) {
        int h = hadwiger_bruteforce(g);
        out.push_back({"oracle_ceiling", r.achieved_size <= h,
                       "achieved " + std::to_string(r.achieved_size) + " vs h(G) = " + std::to_string(h)});
    }
    return out;
}

namespace {

RunResult dispatch(const Graph& g, const std::string& alg, std::uint64_t budget) {
    if (alg == "dm2") return run_dm2(g);
    if (alg == "log") return run_log(g);
    if (alg == "alpha5") return run_alpha5(g, {budget});
    throw PreconditionError("unknown algorithm: " + alg);
}

}  // namespace

Report run_experiments(const ExperimentSpec& spec) {
    std::vector<Graph> graphs;
    for (const GeneratorSpec& gs : spec.generators)
        for (Graph& g : generate(gs)) graphs.push_back(std::move(g));

    bool write_traces = !spec.out_dir.empty();
    if (write_traces)
        std::filesystem::create_directories(std::filesystem::path(spec.out_dir) / "traces");

    Report report;
    int index = 0;
    for (const Graph& g : graphs) {
        std::vector<std::string> algs;
        if (spec.algorithm == "all") {
            algs = {"dm2", "log"};
            if (alpha(g, g.vertices()) == 5) algs.push_back("alpha5");
        } else {
            algs = {spec.algorithm};
        }
        for (const std::string& alg : algs) {
            RunRecord rec;
            rec.index = index++;
            rec.graph6 = serialize_graph6(g);
            rec.n = g.vertex_count();
            rec.alpha_g = g.vertex_count() == 0 ? 0 : alpha(g, g.vertices());
            rec.algorithm = alg;
            try {
                RunResult r = dispatch(g, alg, spec.step1_budget);
                rec.guaranteed = r.guaranteed_size;
                rec.achieved = r.achieved_size;
                rec.flags = r.flags;
                for (const VertexSet& s : r.minor.branch_sets) rec.certificate.push_back(s.to_vector());
                rec.audits = audit_run(g, r, spec.audit);
                rec.trace_ref = trace_hash(r.state.trace());
                if (spec.audit == AuditLevel::Full && g.vertex_count() <= 10) {
                    rec.oracle_h = hadwiger_bruteforce(g);
                    rec.conjecture_satisfied = rec.alpha_g * *rec.oracle_h >= rec.n;
                }
                if (write_traces) {
                    std::ofstream tf(std::filesystem::path(spec.out_dir) / "traces" /
                                     (rec.trace_ref + ".json"));
                    tf << trace_to_json(r.state.trace());
                }
            } catch (const Error& e) {
                rec.error = e.what();
            }
            for (const RecordAudit& a : rec.audits)
                if (!a.pass) report.all_pass = false;
            if (!rec.error.empty()) report.all_pass = false;
            report.records.push_back(std::move(rec));
        }
    }
    return report;
}

std::string Report::to_json() const {
    json recs = json::array();
    for (const RunRecord& r : records) {
        json j;
        j["index"] = r.index;
        j["graph6"] = r.graph6;
        j["n"] = r.n;
        j["alpha"] = r.alpha_g;
        j["algorithm"] = r.algorithm;
        if (r.error.empty()) {
            j["guaranteed_size"] = r.guaranteed;
            j["achieved_size"] = r.achieved;
            j["certificate"] = r.certificate;
            j["flags"] = r.flags;
            json audits = json::array();
            for (const RecordAudit& a : r.audits) {
                json aj;
                aj["name"] = a.name;
                aj["pass"] = a.pass;
                if (!a.detail.empty()) aj["detail"] = a.detail;
                audits.push_back(std::move(aj));
            }
            j["invariant_audit"] = std::move(audits);
            j["trace_ref"] = r.trace_ref;
            if (r.oracle_h) j["oracle_h"] = *r.oracle_h;
            if (r.conjecture_satisfied) j["conjecture_satisfied"] = *r.conjecture_satisfied;
        } else {
            j["error"] = r.error;
        }
        recs.push_back(std::move(j));
    }
    json doc;
    doc["schema_version"] = schema_version;
    doc["records"] = std::move(recs);
    doc["all_pass"] = all_pass;
    return doc.dump(2);
}

std::string Report::to_markdown() const {
    std::ostringstream out;
    out << "| index | n | alpha | algorithm | guaranteed | achieved | audits |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const RunRecord& r : records) {
        int bad = 0;
        for (const RecordAudit& a : r.audits)
            if (!a.pass) ++bad;
        out << "| " << r.index << " | " << r.n << " | " << r.alpha_g << " | " << r.algorithm
            << " | " << r.guaranteed << " | " << r.achieved << " | "
            << (r.error.empty() ? (bad ? std::to_string(bad) + " failed" : "pass") : "error") << " |\n";
    }
    return out.str();
}

std::vector<std::string> reverify_report(const std::string& report_json) {
    json doc = json::parse(report_json);
    std::vector<std::string> failures;
    for (const json& j : doc.at("records")) {
        if (j.contains("error")) continue;
        Graph g = parse_graph6(j.at("graph6").get<std::string>());
        MinorCertificate cert;
        for (const auto& arr : j.at("certificate")) {
            VertexSet s;
            for (int v : arr.get<std::vector<int>>()) s.add(v);
            cert.branch_sets.push_back(s);
        }
        VerifyResult vr = verify_minor(g, cert);
        if (!vr.ok)
            failures.push_back("record " + std::to_string(j.at("index").get<int>()) + ": " + vr.reason);
        int achieved = j.at("achieved_size").get<int>();
        if (static_cast<int>(cert.branch_sets.size()) != achieved)
            failures.push_back("record " + std::to_string(j.at("index").get<int>()) +
                               ": certificate size mismatch");
    }
    return failures;
}

std::string bounds_table_csv(int max_alpha) {
    std::ostringstream out;
    out << "alpha,duchet_meyniel_2a_minus_1,kawarabayashi_song_2a_minus_2,r,improves\n";
    for (int a = 1; a <= max_alpha; ++a) {
        int r = bound_r(a);
        out << a << "," << (2 * a - 1) << "," << (2 * a - 2) << "," << r << ","
            << (r < 2 * a - 2 ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string bounds_table_markdown(int max_alpha) {
    std::ostringstream out;
    out << "| alpha | 2a-1 | 2a-2 | r | improves |\n|---|---|---|---|---|\n";
    for (int a = 1; a <= max_alpha; ++a) {
        int r = bound_r(a);
        out << "| " << a << " | " << (2 * a - 1) << " | " << (2 * a - 2) << " | " << r << " | "
            << (r < 2 * a - 2 ? "yes" : "") << " |\n";
    }
    return out.str();
}

}  // namespace minors
