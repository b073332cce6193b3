// Command-line front end: generate, transform, count, predict, verify.
// Graph JSON travels on stdin/stdout; diagnostics go to stderr. Exit codes:
// 0 ok, 2 usage/format, 3 precondition, 4 capacity, 5 verification mismatch.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dimerlab/formulas.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/lattices.hpp"
#include "dimerlab/matching.hpp"
#include "dimerlab/transforms.hpp"
#include "dimerlab/verify.hpp"
#include "dimerlab/version.hpp"

namespace {

std::string slurp_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

dimerlab::Graph read_graph() { return dimerlab::graph_from_json_string(slurp_stdin()); }

void emit_graph(const dimerlab::Graph& g, const std::string& format) {
    if (format == "dot") std::cout << dimerlab::graph_to_dot(g);
    else std::cout << dimerlab::graph_to_json_string(g) << "\n";
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace dimerlab;

    CLI::App app{"dimerlab: exact dimer-covering counts on vertex-edge and line graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and print it");
    std::string gen_lattice, gen_named, gen_format = "json";
    std::size_t gen_rows = 0, gen_cols = 0, gen_random_n = 0;
    std::uint64_t gen_seed = 1;
    bool gen_weighted = false;
    auto* opt_lattice = gen->add_option("--lattice", gen_lattice, "honeycomb|kagome|silicate")
                            ->check(CLI::IsMember({"honeycomb", "kagome", "silicate"}));
    auto* opt_rows = gen->add_option("--rows", gen_rows, "torus rows (>= 2)");
    auto* opt_cols = gen->add_option("--cols", gen_cols, "torus columns (>= 2)");
    auto* opt_named = gen->add_option(
        "--named", gen_named, "K4|K33|prism|cube|petersen|bridged10|bridged14");
    auto* opt_random = gen->add_option("--random-cubic", gen_random_n,
                                       "connected simple cubic graph on N vertices");
    gen->add_option("--seed", gen_seed, "seed for --random-cubic (default 1)");
    gen->add_flag("--weighted", gen_weighted, "label lattice edges with weight symbols");
    gen->add_option("--format", gen_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    opt_lattice->excludes(opt_named)->excludes(opt_random);
    opt_named->excludes(opt_random);
    opt_lattice->needs(opt_rows)->needs(opt_cols);

    // transform
    auto* transform = app.add_subcommand("transform", "derive a graph from the one on stdin");
    std::string tr_op, tr_format = "json";
    transform->add_option("--op", tr_op, "line|middle|reduce")
        ->required()
        ->check(CLI::IsMember({"line", "middle", "reduce"}));
    transform->add_option("--format", tr_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // count
    auto* count = app.add_subcommand("count", "count dimer coverings of the graph on stdin");
    bool count_weighted = false;
    std::string count_method;
    count->add_flag("--weighted", count_weighted, "sum edge-weight products instead");
    count->add_option("--method", count_method, "enum|dp (default: dp, or enum when --weighted)")
        ->check(CLI::IsMember({"enum", "dp"}));

    // predict
    auto* predict = app.add_subcommand(
        "predict", "closed-form dimer count of the vertex-edge graph of the graph on stdin");

    // verify
    auto* verify = app.add_subcommand("verify", "run a predicted-vs-oracle suite");
    std::string verify_suite;
    std::optional<int> verify_nmax, verify_trials;
    std::optional<std::uint64_t> verify_seed;
    verify->add_option("--suite", verify_suite,
                       "thm11|thm14|thm15|thm16|bijection|lattices|reduction|all")
        ->required()
        ->check(CLI::IsMember(
            {"thm11", "thm14", "thm15", "thm16", "bijection", "lattices", "reduction", "all"}));
    verify->add_option("--nmax", verify_nmax, "largest random graph order");
    verify->add_option("--trials", verify_trials, "random graphs per suite");
    verify->add_option("--seed", verify_seed, "corpus seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            Graph g;
            if (!gen_lattice.empty()) {
                if (gen_rows < 2 || gen_cols < 2)
                    return usage_error("lattice sizes must be at least 2");
                LatticeSpec spec;
                spec.family = gen_lattice == "honeycomb" ? LatticeFamily::honeycomb
                              : gen_lattice == "kagome"  ? LatticeFamily::kagome
                                                         : LatticeFamily::silicate;
                spec.rows = gen_rows;
                spec.cols = gen_cols;
                spec.weighted = gen_weighted;
                g = build_lattice(spec);
            } else if (!gen_named.empty()) {
                try {
                    g = named_cubic(gen_named);
                } catch (const PreconditionError& e) {
                    return usage_error(e.what());
                }
            } else if (opt_random->count() > 0) {
                if (gen_random_n < 4 || gen_random_n % 2 != 0)
                    return usage_error("--random-cubic needs an even N >= 4");
                g = random_cubic(gen_random_n, gen_seed);
            } else {
                return usage_error("pick one of --lattice, --named, --random-cubic");
            }
            emit_graph(g, gen_format);
            return 0;
        }

        if (transform->parsed()) {
            Graph g = read_graph();
            if (tr_op == "line") {
                emit_graph(line_graph(g), tr_format);
            } else if (tr_op == "middle") {
                emit_graph(middle_graph(g), tr_format);
            } else {
                auto [base, trace] = reduce_to_base(g);
                std::cerr << trace_to_json(trace).dump() << "\n";
                emit_graph(base, tr_format);
            }
            return 0;
        }

        if (count->parsed()) {
            Graph g = read_graph();
            if (count_weighted) {
                CountMethod method =
                    count_method == "dp" ? CountMethod::frontier_dp : CountMethod::enumerate;
                std::cout << polynomial_to_json(weighted_pm_sum(g, method)).dump() << "\n";
            } else {
                CountMethod method =
                    count_method == "enum" ? CountMethod::enumerate : CountMethod::frontier_dp;
                nlohmann::ordered_json out;
                out["count"] = count_pm(g, method).str();
                std::cout << out.dump() << "\n";
            }
            return 0;
        }

        if (predict->parsed()) {
            Graph g = read_graph();
            std::cout << prediction_to_json(predict_pm_middle(g)).dump() << "\n";
            return 0;
        }

        if (verify->parsed()) {
            VerificationReport rep = run_suite(verify_suite, verify_nmax, verify_trials,
                                               verify_seed);
            std::cout << report_to_json(rep).dump(2) << "\n";
            return rep.all_match() ? 0 : 5;
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
