#include "roman/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roman/dp_solver.hpp"
#include "roman/generator.hpp"
#include "roman/instance_io.hpp"
#include "roman/oracle.hpp"

namespace roman {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// y-labels of `a` permuted back to the pre-normalization order.
RomanAssignment unpermute(const RomanAssignment& a, const std::vector<int>& perm) {
    RomanAssignment out = a;
    for (int jn = 1; jn < a.y_count(); ++jn) out.set_y(perm[static_cast<std::size_t>(jn - 1)], a.y(jn));
    return out;
}

int cmd_solve(const std::string& file, bool emit_assignment, bool emit_table, bool relaxed,
              std::ostream& out, std::ostream& err) {
    const auto g = parse_cbg(read_file(file));
    auto [norm, perm] = g.normalized();
    try {
        const auto res = solve(AugmentedGraph(std::move(norm)), SolveOptions{relaxed});
        out << "rdn " << res.rdn << '\n';
        if (emit_assignment) out << serialize_rdf(unpermute(res.witness, perm));
        if (emit_table) {
            for (int i = 0; i <= res.table.m(); ++i) {
                for (int j = 0; j <= res.table.n(); ++j) out << (j ? " " : "") << res.table.at(i, j).value;
                out << '\n';
            }
        }
        return kExitOk;
    } catch (const InvalidWitness& e) {
        err << "witness validation failed: " << e.what() << '\n';
        return kExitVerification;
    }
}

int cmd_oracle(const std::string& file, bool all_optima, std::ostream& out, std::ostream& err) {
    const auto g = parse_cbg(read_file(file));
    OracleOptions opts;
    opts.enumerate_all = all_optima;
    try {
        const auto res = oracle_solve(g, opts);
        out << "rdn " << res.optimum << '\n';
        out << serialize_rdf(res.witness);
        if (all_optima) {
            out << "optima " << res.all_optima_count << '\n';
            if (res.all_optima_overflow) out << "optima_overflow 1\n";
        }
        return kExitOk;
    } catch (const TooLarge& e) {
        err << e.what() << '\n';
        return kExitTooLarge;
    }
}

int cmd_gen(const GenConfig& cfg, std::ostream& out) {
    out << serialize_cbg(generate(cfg));
    return kExitOk;
}

// With one file: convexity + normal-form report. With two: RDF validation.
int cmd_check(const std::string& graph_file, const std::string& rdf_file, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(graph_file);

    // An edge-list variant is accepted here (and only here): header
    // "m n e" followed by e lines "i j".
    ConvexBipartiteGraph g;
    {
        std::istringstream probe(text);
        std::string first_line;
        while (std::getline(probe, first_line)) {
            const auto pos = first_line.find_first_not_of(" \t\r");
            if (pos != std::string::npos && first_line[pos] != '#') break;
        }
        std::istringstream head(first_line);
        long long a = 0, b = 0, e = -1;
        head >> a >> b >> e;
        if (e >= 0) {
            std::vector<std::pair<int, int>> edges;
            std::istringstream rest(text);
            std::string line;
            bool seen_header = false;
            int lineno = 0;
            while (std::getline(rest, line)) {
                ++lineno;
                const auto pos = line.find_first_not_of(" \t\r");
                if (pos == std::string::npos || line[pos] == '#') continue;
                if (!seen_header) {
                    seen_header = true;
                    continue;
                }
                std::istringstream ls(line);
                int i = 0, j = 0;
                if (!(ls >> i >> j)) throw ParseError(lineno, "expected edge 'i j'");
                edges.push_back({i, j});
            }
            if (static_cast<long long>(edges.size()) != e)
                throw WrongLineCount("expected " + std::to_string(e) + " edges, got " +
                                     std::to_string(edges.size()));
            try {
                g = ConvexBipartiteGraph::from_edge_list(static_cast<int>(a), static_cast<int>(b), edges);
            } catch (const NotConvex& nc) {
                out << "convex: no\n";
                err << nc.what() << '\n';
                return kExitVerification;
            }
        } else {
            g = parse_cbg(text);
        }
    }
    out << "convex: yes\n";

    if (rdf_file.empty()) {
        if (g.is_normalized()) {
            out << "normalized: yes\n";
        } else {
            auto [norm, perm] = g.normalized();
            out << "normalized: no\n";
            out << "permutation:";
            for (int p : perm) out << ' ' << p;
            out << '\n';
            out << serialize_cbg(norm);
        }
        return kExitOk;
    }

    const auto rdf = parse_rdf(read_file(rdf_file), g.m(), g.n());
    const AugmentedGraph aug(g);
    const GraphView full(aug, g.m(), g.n());
    if (const auto bad = first_violation(full, rdf)) {
        const auto& v = bad->vertex;
        out << "invalid: " << (v.on_x ? "x" : "y") << v.index << " labeled 0 with no 2-neighbor\n";
        return kExitVerification;
    }
    out << "valid weight=" << rdf.real_weight() << '\n';
    return kExitOk;
}

struct CompareArgs {
    int max_m = 4;
    int max_n = 4;
    int trials = 100;
    std::uint64_t seed = 0;
    bool relaxed = false;
    std::string dump_dir = "mismatch_fixtures";
};

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    if (args.max_m < 1 || args.max_n < 1) {
        err << "caps must be >= 1\n";
        return kExitUsage;
    }
    OracleOptions ocap;
    if (args.max_m + args.max_n > ocap.subset_cap) {
        err << "caps exceed oracle limit of " << ocap.subset_cap << " vertices\n";
        return kExitTooLarge;
    }
    SplitMix64 rng(args.seed);
    int mismatches = 0;
    long long guard_hits = 0;
    for (int trial = 0; trial < args.trials; ++trial) {
        const GenConfig cfg = compare_trial_config(rng, args.max_m, args.max_n);
        const auto g = generate(cfg);

        int dp_value = -1;
        std::string dp_witness;
        std::string failure;
        SolveStats stats;
        try {
            const auto res = solve(AugmentedGraph(g), SolveOptions{args.relaxed});
            dp_value = res.rdn;
            dp_witness = serialize_rdf(res.witness);
            stats = res.stats;
            guard_hits += stats.lemma3_guard_hits;
        } catch (const Error& e) {
            failure = e.what();
        }
        const auto oracle = oracle_solve(g);
        if (dp_value == oracle.optimum && failure.empty()) continue;

        ++mismatches;
        const std::string cbg = serialize_cbg(g);
        out << "mismatch trial=" << trial << " dp=" << dp_value << " oracle=" << oracle.optimum << '\n';
        if (!failure.empty()) out << "solver_error " << failure << '\n';
        out << cbg;
        out << "dp_witness:\n" << dp_witness;
        out << "oracle_witness:\n" << serialize_rdf(oracle.witness);
        if (!args.dump_dir.empty()) {
            std::filesystem::create_directories(args.dump_dir);
            std::ofstream dump(args.dump_dir + "/mismatch_" + std::to_string(trial) + ".cbg");
            dump << "# dp=" << dp_value << " oracle=" << oracle.optimum << " seed=" << args.seed
                 << " trial=" << trial << '\n'
                 << cbg;
        }
    }
    out << "trials=" << args.trials << " mismatches=" << mismatches << '\n';
    if (guard_hits > 0) err << "lemma3 guard hits: " << guard_hits << '\n';
    return mismatches == 0 ? kExitOk : kExitVerification;
}

}  // namespace

GenConfig compare_trial_config(SplitMix64& rng, int max_m, int max_n) {
    GenConfig cfg;
    cfg.m = rng.next_int(1, max_m);
    cfg.n = rng.next_int(1, max_n);
    cfg.p_isolated = rng.next_u01() * 0.3;
    cfg.span_bias = 0.25 + 0.65 * rng.next_u01();
    cfg.seed = rng.next();
    return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Roman domination on convex bipartite graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string rdf_file;
    bool emit_assignment = false;
    bool emit_table = false;
    bool relaxed = false;
    bool all_optima = false;

    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance exactly via the DP");
    solve_cmd->add_option("file", file, "CBG instance file")->required();
    solve_cmd->add_flag("--emit-assignment", emit_assignment, "print a witnessing labeling");
    solve_cmd->add_flag("--emit-table", emit_table, "print the DP value table");
    solve_cmd->add_flag("--relaxed-ranges", relaxed, "also try r = i-1 in the (0,2) case");

    auto* oracle_cmd = app.add_subcommand("oracle", "Solve by exhaustive search (small instances)");
    oracle_cmd->add_option("file", file, "CBG instance file")->required();
    oracle_cmd->add_flag("--all-optima", all_optima, "count all optimal labelings");

    GenConfig gen_cfg;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--m", gen_cfg.m, "X vertex count")->required();
    gen_cmd->add_option("--n", gen_cfg.n, "Y vertex count")->required();
    gen_cmd->add_option("--seed", gen_cfg.seed, "64-bit seed");
    gen_cmd->add_option("--p-isolated", gen_cfg.p_isolated, "isolated Y probability");
    gen_cmd->add_option("--span-bias", gen_cfg.span_bias, "geometric width parameter in (0,1]");

    auto* check_cmd = app.add_subcommand("check", "Validate a graph, or an RDF against a graph");
    check_cmd->add_option("graph", file, "CBG instance file (or edge list with 'm n e' header)")->required();
    check_cmd->add_option("rdf", rdf_file, "RDF labeling file");

    CompareArgs cargs;
    auto* compare_cmd = app.add_subcommand("compare", "Fuzz the DP against the oracle");
    compare_cmd->add_option("--max-m", cargs.max_m, "max X vertex count");
    compare_cmd->add_option("--max-n", cargs.max_n, "max Y vertex count");
    compare_cmd->add_option("--trials", cargs.trials, "number of trials");
    compare_cmd->add_option("--seed", cargs.seed, "64-bit seed");
    compare_cmd->add_flag("--relaxed-ranges", cargs.relaxed, "forward to the solver");
    compare_cmd->add_option("--dump-dir", cargs.dump_dir, "directory for mismatch fixtures ('' disables)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(file, emit_assignment, emit_table, relaxed, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(file, all_optima, out, err);
        if (gen_cmd->parsed()) {
            try {
                return cmd_gen(gen_cfg, out);
            } catch (const std::invalid_argument& e) {
                err << e.what() << '\n';
                return kExitUsage;
            }
        }
        if (check_cmd->parsed()) return cmd_check(file, rdf_file, out, err);
        if (compare_cmd->parsed()) return cmd_compare(cargs, out, err);
    } catch (const TooLarge& e) {
        err << e.what() << '\n';
        return kExitTooLarge;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const WrongLineCount& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const IntervalOutOfRange& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace roman
