// Command-line front end: solve, verify, oracle, egcc, gen gadget,
// reduce clique, bench.
//
// Exit codes: 0 = yes/valid/consistent/success, 1 = no/invalid/inconsistent,
// 2 = usage or input error, 3 = oracle budget exhausted.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genfactor/brute_oracle.hpp"
#include "genfactor/egcc.hpp"
#include "genfactor/fpt_solver.hpp"
#include "genfactor/gadgets.hpp"
#include "genfactor/instance.hpp"
#include "genfactor/instance_io.hpp"

namespace {

using namespace genfactor;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

void print_stats(std::ostream& os, const SolveStats& s) {
    os << "k=" << s.k << '\n'
       << "modules_found=" << s.modules_found << '\n'
       << "passthrough_vertices=" << s.passthrough_vertices << '\n'
       << "contracted_edge_count=" << s.contracted_edge_count << '\n'
       << "x_subsets_explored=" << s.x_subsets_explored << '\n'
       << "forests_explored=" << s.forests_explored << '\n'
       << "forest_solves=" << s.forest_solves << '\n'
       << "fast_path=" << (s.fast_path ? 1 : 0) << '\n'
       << "yes=" << (s.yes ? 1 : 0) << '\n';
}

FastPathMode parse_fast_path(const std::string& value) {
    if (value == "auto") return FastPathMode::automatic;
    if (value == "on") return FastPathMode::on;
    if (value == "off") return FastPathMode::off;
    throw CLI::ValidationError("--fast-path", "must be one of auto|on|off");
}

int run_solve(const std::string& path, const std::string& out_path,
              const std::string& fast_path, int parallel, bool deterministic, bool stats) {
    const Instance inst = parse_instance(read_text_file(path));
    SolveOptions options;
    options.fast_path = parse_fast_path(fast_path);
    options.threads = parallel;
    options.deterministic = deterministic;
    const SolveResult result = solve_instance(inst, options);
    if (stats) print_stats(std::cerr, result.stats);
    if (!result.decision.witness) {
        std::cerr << "NO\n";
        return kExitNo;
    }
    const std::string text = serialize_factor(inst, *result.decision.witness);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    return kExitYes;
}

int run_verify(const std::string& instance_path, const std::string& factor_path) {
    const Instance inst = parse_instance(read_text_file(instance_path));
    const FactorFile file = parse_factor(read_text_file(factor_path));
    const EdgeWeighting phi = bind_factor(inst, file);  // structural errors throw
    const VerifyResult result = verify_factor(inst, phi);
    if (result.ok) {
        std::cout << "valid\n";
        return kExitYes;
    }
    std::cout << describe(inst, *result.violation) << '\n';
    return kExitNo;
}

int run_oracle(const std::string& path, bool enumerate, long long budget) {
    const Instance inst = parse_instance(read_text_file(path));
    OracleOptions options;
    options.node_budget = budget;
    if (enumerate) {
        const EnumerationResult result = enumerate_all_factors(inst, options);
        if (!result.complete) {
            std::cerr << "budget exhausted after " << result.nodes << " nodes\n";
            return kExitBudget;
        }
        std::cout << "factors " << result.factors.size() << '\n';
        for (const EdgeWeighting& phi : result.factors) std::cout << serialize_factor(inst, phi);
        return result.factors.empty() ? kExitNo : kExitYes;
    }
    const OracleResult result = solve_bruteforce(inst, options);
    if (result.status == OracleStatus::budget_exceeded) {
        std::cerr << "budget exhausted after " << result.nodes << " nodes\n";
        return kExitBudget;
    }
    if (result.status == OracleStatus::yes) {
        std::cout << "YES\n";
        return kExitYes;
    }
    std::cout << "NO\n";
    return kExitNo;
}

int run_egcc(const std::string& path, int parallel) {
    const EgccModel model = parse_egcc(read_text_file(path));
    const auto assignment = check_consistency(model, parallel);
    if (!assignment) {
        std::cerr << "inconsistent\n";
        return kExitNo;
    }
    for (const auto& [var, val] : *assignment) std::cout << "assign " << var << ' ' << val << '\n';
    return kExitYes;
}

int run_gen_gadget(const std::vector<int>& amounts, int r, int rprime) {
    if (rprime < 0) {
        const SelectionGadget g = selection_gadget(amounts, r);
        std::cout << "# selection gadget: hub v " << g.hub << ", outputs v "
                  << (g.outputs.empty() ? 0 : g.outputs.front()) << "..v "
                  << (g.outputs.empty() ? 0 : g.outputs.back()) << '\n'
                  << serialize_instance(g.instance);
    } else {
        const DoubleSelectionGadget g = double_selection_gadget(amounts, r, rprime);
        std::cout << "# double selection gadget: lower hub v " << g.lower_hub << ", q v " << g.q
                  << ", upper hub v " << g.upper_hub << ", scale " << g.scale << '\n'
                  << serialize_instance(g.instance);
    }
    return kExitYes;
}

int run_reduce_clique(const std::string& path) {
    const PartitionedGraph g = parse_pclique(read_text_file(path));
    const CliqueReduction red = reduce_clique(g);
    std::cout << "# clique reduction: " << g.parts << " parts of size " << g.part_size
              << ", scale " << red.scale << '\n';
    std::cout << "# shared vertices:";
    for (int h : red.h_vertices) std::cout << " v" << h;
    std::cout << '\n' << serialize_instance(red.instance);
    return kExitYes;
}

int run_bench(const std::string& dir, const std::string& fast_path, int parallel) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".gf")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .gf instances in " << dir << '\n';
        return kExitError;
    }
    SolveOptions options;
    options.fast_path = parse_fast_path(fast_path);
    options.threads = parallel;
    for (const fs::path& file : files) {
        const Instance inst = parse_instance(read_text_file(file.string()));
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult result = solve_instance(inst, options);
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << file.filename().string() << ": " << (result.decision.witness ? "YES" : "NO")
                  << "  k=" << result.stats.k << " subsets=" << result.stats.x_subsets_explored
                  << " forests=" << result.stats.forests_explored
                  << " fast_path=" << (result.stats.fast_path ? 1 : 0) << "  time_ms=" << ms
                  << '\n';
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for degree-list factors of bipartite edge-weighted graphs"};
    app.require_subcommand(1);

    std::string instance_path, factor_path, out_path, model_path, pclique_path, bench_dir;
    std::string fast_path = "auto";
    int parallel = 1;
    bool deterministic = false;
    bool stats = false;
    bool enumerate = false;
    long long budget = 100'000'000;
    std::vector<int> amounts;
    int gadget_r = 0;
    int gadget_rprime = -1;

    CLI::App* solve = app.add_subcommand("solve", "Decide an instance and print a witness factor");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--out", out_path, "write the witness factor to a file instead of stdout");
    solve->add_option("--fast-path", fast_path, "auto|on|off")->default_str("auto");
    solve->add_option("--parallel", parallel, "worker threads for the forest search");
    solve->add_flag("--deterministic", deterministic, "force the serial search");
    solve->add_flag("--stats", stats, "print search statistics to stderr");

    CLI::App* verify = app.add_subcommand("verify", "Check a factor file against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("factor", factor_path, "factor file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive reference search");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_flag("--enumerate", enumerate, "list every factor instead of deciding");
    oracle->add_option("--budget", budget, "search-node budget");

    CLI::App* egcc = app.add_subcommand("egcc", "Decide consistency of a cardinality model");
    egcc->add_option("model", model_path, "model file (JSON)")->required();
    egcc->add_option("--parallel", parallel, "worker threads");

    CLI::App* gen = app.add_subcommand("gen", "Generate test instances");
    CLI::App* gadget = gen->add_subcommand("gadget", "Emit a (double) selection gadget");
    gadget->add_option("--A", amounts, "amount set, comma separated")->required()->delimiter(',');
    gadget->add_option("--r", gadget_r, "output count")->required();
    gadget->add_option("--rprime", gadget_rprime, "upper output count (emits the double gadget)");
    gen->require_subcommand(1);

    CLI::App* reduce = app.add_subcommand("reduce", "Compile other problems into instances");
    CLI::App* clique = reduce->add_subcommand("clique", "Compile a partitioned clique query");
    clique->add_option("pclique", pclique_path, "partitioned-graph file")->required();
    reduce->require_subcommand(1);

    CLI::App* bench = app.add_subcommand("bench", "Solve every .gf instance in a directory");
    bench->add_option("dir", bench_dir, "instance directory")->required();
    bench->add_option("--fast-path", fast_path, "auto|on|off")->default_str("auto");
    bench->add_option("--parallel", parallel, "worker threads for the forest search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitError;
    }

    try {
        if (solve->parsed())
            return run_solve(instance_path, out_path, fast_path, parallel, deterministic, stats);
        if (verify->parsed()) return run_verify(instance_path, factor_path);
        if (oracle->parsed()) return run_oracle(instance_path, enumerate, budget);
        if (egcc->parsed()) return run_egcc(model_path, parallel);
        if (gen->parsed() && gadget->parsed())
            return run_gen_gadget(amounts, gadget_r, gadget_rprime);
        if (reduce->parsed() && clique->parsed()) return run_reduce_clique(pclique_path);
        if (bench->parsed()) return run_bench(bench_dir, fast_path, parallel);
        std::cerr << "no subcommand selected\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
