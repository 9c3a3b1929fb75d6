#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <iterator>
#include <locale>
#include <sstream>

#include <CLI11.hpp>

#include "lgr/error.hpp"
#include "lgr/graph_io.hpp"
#include "lgr/oracle.hpp"
#include "lgr/solvers.hpp"

namespace lgr::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Syntax, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void print_witness(std::ostream& out, const Witness& w) {
    out << "witness";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i == 0 ? " " : "; ") << i + 1 << ':';
        bool first = true;
        for_each_bit(w[i], [&](int x) {
            out << (first ? "" : ",") << x + 1;
            first = false;
        });
    }
    out << '\n';
}

int report(std::ostream& out, const SolveOutcome& outcome) {
    if (!outcome.feasible()) {
        out << "infeasible\n";
        return kInfeasible;
    }
    const Optimum& opt = outcome.optimum();
    out << "value " << opt.value << '\n';
    out << "count " << opt.count.str() << '\n';
    if (opt.witness) print_witness(out, *opt.witness);
    return kOk;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ProblemKind problem_of(const std::string& name) {
    auto kind = parse_problem(name);
    if (!kind) throw UsageError("unknown problem '" + name + "' (mis|mvc|cvc|mds|cds)");
    return *kind;
}

std::pair<int, int> k_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(text);
            return {k, k};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--k expects MIN..MAX, got '" + text + "'");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Layered-graph DP solver: MIS, MVC, CVC, MDS, CDS with exact solution counts"};
    app.require_subcommand(1);

    std::string problem;
    std::string mode_name = "paper";
    std::string input = "-";
    bool witness = false;

    auto* solve_cmd = app.add_subcommand("solve", "Solve a layered graph by layer DP");
    solve_cmd->add_option("--problem", problem, "mis|mvc|cvc|mds|cds")->required();
    solve_cmd->add_option("--mode", mode_name, "paper|exact (exact affects cvc and cds)");
    solve_cmd->add_flag("--witness", witness, "Also print one optimum solution");
    solve_cmd->add_option("--input", input, "LGR file, or - for stdin");

    int cap = kDefaultOracleCap;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force the optimum over all vertex subsets");
    oracle_cmd->add_option("--problem", problem, "mis|mvc|cvc|mds|cds")->required();
    oracle_cmd->add_option("--input", input, "LGR file, or - for stdin");
    oracle_cmd->add_option("--max-vertices", cap, "Refuse graphs with more vertices");

    std::string kind = "full";
    int k = 0;
    int q = 0;
    double intra = 0.5;
    double inter = 0.5;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("generate", "Print a generated instance in LGR format");
    gen_cmd->add_option("--kind", kind, "full|random|llg")->check(CLI::IsMember({"full", "random", "llg"}));
    gen_cmd->add_option("--k", k, "Labels per layer")->required();
    gen_cmd->add_option("--q", q, "Number of layers")->required();
    gen_cmd->add_option("--intra-density", intra, "Probability of each intra edge");
    gen_cmd->add_option("--inter-density", inter, "Probability of each inter edge");
    gen_cmd->add_option("--seed", seed, "Generator seed");

    auto* validate_cmd = app.add_subcommand("validate", "Validate and classify a layered graph");
    validate_cmd->add_option("--input", input, "LGR file, or - for stdin");

    std::string k_text;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solver on random instances, CSV k,n,millis");
    bench_cmd->add_option("--problem", problem, "mis|mvc|cvc|mds|cds")->required();
    bench_cmd->add_option("--k", k_text, "MIN..MAX")->required();
    bench_cmd->add_option("--q", q, "Number of layers")->required();
    bench_cmd->add_option("--seed", seed, "Generator seed");
    bench_cmd->add_option("--mode", mode_name, "paper|exact");
    bench_cmd->add_option("--intra-density", intra, "Probability of each intra edge");
    bench_cmd->add_option("--inter-density", inter, "Probability of each inter edge");

    std::vector<std::string> argv_store{"lgr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    out.imbue(std::locale::classic());
    try {
        if (*solve_cmd) {
            const ProblemKind p = problem_of(problem);
            const auto mode = parse_mode(mode_name);
            if (!mode) throw UsageError("unknown mode '" + mode_name + "' (paper|exact)");
            const LayeredGraph g = parse(read_input(input, in));
            return report(out, solve(g, p, *mode, witness));
        }
        if (*oracle_cmd) {
            const ProblemKind p = problem_of(problem);
            const LayeredGraph g = parse(read_input(input, in));
            return report(out, oracle_solve(g, p, cap));
        }
        if (*gen_cmd) {
            if (kind == "full") {
                out << serialize(gen_full(k, q));
            } else if (kind == "random") {
                out << serialize(gen_random(k, q, intra, inter, seed));
            } else {
                out << serialize(gen_llg(k, q, intra, inter, seed));
            }
            return kOk;
        }
        if (*validate_cmd) {
            const LayeredGraph g = parse(read_input(input, in));
            const Variant v = classify(g);
            auto b = [](bool x) { return x ? "true" : "false"; };
            out << "k=" << g.k() << " q=" << g.q() << " n=" << g.n() << " llg=" << b(v.is_llg)
                << " slg=" << b(v.is_slg) << " clg=" << b(v.is_clg) << " full=" << b(v.is_full) << '\n';
            return kOk;
        }
        if (*bench_cmd) {
            const ProblemKind p = problem_of(problem);
            const auto mode = parse_mode(mode_name);
            if (!mode) throw UsageError("unknown mode '" + mode_name + "' (paper|exact)");
            const auto [k_min, k_max] = k_range(k_text);
            if (k_min < 1 || k_max < k_min) throw UsageError("--k range must satisfy 1 <= MIN <= MAX");
            out << "k,n,millis\n";
            for (int kk = k_min; kk <= k_max; ++kk) {
                const LayeredGraph g = gen_random(kk, q, intra, inter, seed + static_cast<std::uint64_t>(kk));
                const auto start = std::chrono::steady_clock::now();
                const SolveOutcome outcome = solve(g, p, *mode, false);
                const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
                (void)outcome;
                out << kk << ',' << g.n() << ',' << std::fixed << std::setprecision(3) << elapsed.count() << '\n';
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == ErrorCode::InstanceTooLarge ? kTooLarge : kInputError;
    }
    return kUsageError;
}

}  // namespace lgr::cli
