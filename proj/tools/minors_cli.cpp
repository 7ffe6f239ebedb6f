#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "minors/alpha.hpp"
#include "minors/bounds.hpp"
#include "minors/experiment.hpp"
#include "minors/generate.hpp"
#include "minors/io.hpp"
#include "minors/verify.hpp"

using namespace minors;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << data;
}

Graph load_graph(const std::string& input, const std::string& format) {
    std::string data = read_file(input);
    if (format == "dimacs") return parse_dimacs(data);
    if (format == "g6") {
        auto nl = data.find('\n');
        return parse_graph6(nl == std::string::npos ? data : data.substr(0, nl));
    }
    throw PreconditionError("unknown format: " + format);
}

int cmd_run(const std::vector<std::string>& gens, const std::string& input,
            const std::string& format, const std::string& alg, const std::string& audit,
            std::uint64_t seed, std::uint64_t budget, const std::string& out_dir) {
    ExperimentSpec spec;
    for (const std::string& g : gens) {
        GeneratorSpec gs = parse_generator(g);
        if (gs.kind == "gnp" && gs.seed == 0) gs.seed = seed;
        spec.generators.push_back(std::move(gs));
    }
    if (!input.empty()) {
        GeneratorSpec gs;
        gs.kind = "file";
        gs.path = input;
        spec.generators.push_back(std::move(gs));
    }
    (void)format;
    if (spec.generators.empty()) {
        std::cerr << "run: no graphs given (use --gen or --input)\n";
        return 2;
    }
    spec.algorithm = alg;
    spec.audit = audit == "none" ? AuditLevel::None : (audit == "full" ? AuditLevel::Full : AuditLevel::Fast);
    spec.step1_budget = budget;
    spec.out_dir = out_dir;

    Report report = run_experiments(spec);
    std::string js = report.to_json();
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file((std::filesystem::path(out_dir) / "report.json").string(), js);
        write_file((std::filesystem::path(out_dir) / "report.md").string(), report.to_markdown());
        std::cout << report.to_markdown();
    } else {
        std::cout << js << "\n";
    }
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete-minor construction via breaking/extending operations and chordal contraction"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run drivers over graphs and emit a JSON report");
    std::vector<std::string> run_gens;
    std::string run_input, run_format = "g6", run_alg = "all", run_audit = "fast", run_out;
    std::uint64_t run_seed = 1, run_budget = 20'000'000;
    run->add_option("--gen", run_gens, "generator spec, e.g. gnp:n=18,p=0.3,count=5 or cliques:2,2,2,2,2");
    run->add_option("--input", run_input, "graph file (graph6 lines or DIMACS)");
    run->add_option("--format", run_format, "g6 | dimacs")->check(CLI::IsMember({"g6", "dimacs"}));
    run->add_option("--alg", run_alg, "dm2 | log | alpha5 | all")
        ->check(CLI::IsMember({"dm2", "log", "alpha5", "all"}));
    run->add_option("--audit", run_audit, "none | fast | full")
        ->check(CLI::IsMember({"none", "fast", "full"}));
    run->add_option("--seed", run_seed, "seed for seedless gnp generators");
    run->add_option("--budget", run_budget, "alpha5 step-1 search node budget");
    run->add_option("--out", run_out, "output directory (report.json, report.md, traces/)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-verify every certificate in a report");
    std::string verify_input;
    verify->add_option("--input", verify_input, "report.json path")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force Hadwiger number and conjecture audit (n <= 10)");
    std::string oracle_input, oracle_format = "g6";
    oracle->add_option("--input", oracle_input, "graph file")->required();
    oracle->add_option("--format", oracle_format, "g6 | dimacs")->check(CLI::IsMember({"g6", "dimacs"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound table for alpha = 1..max");
    int bounds_max = 300;
    bool bounds_md = false;
    std::string bounds_out;
    bounds->add_option("--max", bounds_max, "largest alpha");
    bounds->add_flag("--md", bounds_md, "markdown instead of CSV");
    bounds->add_option("--out", bounds_out, "write to file instead of stdout");

    // checkf
    auto* checkf = app.add_subcommand("checkf", "verify properties P1..P11 of the bound function f");
    int checkf_xmax = 500;
    double checkf_tau = 0.0;
    checkf->add_option("--xmax", checkf_xmax, "integer range bound");
    checkf->add_option("--tau", checkf_tau, "override tau (regression control; rational values only)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    std::string gen_spec, gen_format = "g6", gen_out;
    gen->add_option("--gen", gen_spec, "generator spec")->required();
    gen->add_option("--format", gen_format, "g6 | dimacs")->check(CLI::IsMember({"g6", "dimacs"}));
    gen->add_option("--out", gen_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return cmd_run(run_gens, run_input, run_format, run_alg, run_audit, run_seed, run_budget,
                           run_out);
        if (verify->parsed()) {
            auto failures = reverify_report(read_file(verify_input));
            for (const std::string& f : failures) std::cerr << "FAIL " << f << "\n";
            std::cout << (failures.empty() ? "all certificates verify\n" : "") << std::flush;
            return failures.empty() ? 0 : 1;
        }
        if (oracle->parsed()) {
            Graph g = load_graph(oracle_input, oracle_format);
            ConjectureAudit audit = conjecture_audit(g);
            int h = hadwiger_bruteforce(g);
            std::cout << "n = " << audit.n << "\nalpha = " << alpha(g, g.vertices()) << "\nh = " << h
                      << "\nalpha*h = " << audit.alpha_h_product
                      << (audit.satisfied ? " >= n" : " < n  (conjecture violated!)") << "\n";
            return audit.satisfied ? 0 : 1;
        }
        if (bounds->parsed()) {
            std::string table = bounds_md ? bounds_table_markdown(bounds_max) : bounds_table_csv(bounds_max);
            if (bounds_out.empty())
                std::cout << table;
            else
                write_file(bounds_out, table);
            return 0;
        }
        if (checkf->parsed()) {
            Q2 t = tau_exact();
            if (checkf_tau != 0.0) {
                // Interpreted as a rational with denominator 10^6.
                long long num = static_cast<long long>(checkf_tau * 1e6 + 0.5);
                t = Q2(BigRat(num, 1000000), BigRat(0));
            }
            auto results = check_f_properties(checkf_xmax, t);
            bool all = true;
            for (const auto& p : results) {
                std::cout << (p.pass ? "PASS " : "FAIL ") << p.name;
                if (!p.pass) std::cout << "  [" << p.counterexample << "]";
                std::cout << "\n";
                all = all && p.pass;
            }
            return all ? 0 : 1;
        }
        if (gen->parsed()) {
            GeneratorSpec gs = parse_generator(gen_spec);
            std::string out;
            for (const Graph& g : generate(gs))
                out += (gen_format == "g6" ? serialize_graph6(g) + "\n" : serialize_dimacs(g));
            if (gen_out.empty())
                std::cout << out;
            else
                write_file(gen_out, out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
