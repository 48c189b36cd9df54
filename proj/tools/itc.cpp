#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "itcover/asymmetric.hpp"
#include "itcover/constructor.hpp"
#include "itcover/criteria.hpp"
#include "itcover/io.hpp"
#include "itcover/solver.hpp"

namespace {

using namespace itcover;

// exit codes: 0 success / IT found, 1 sharp / no-IT / rejected,
// 2 budget exhausted, 64 usage
constexpr int kOk = 0;
constexpr int kSharp = 1;
constexpr int kBudget = 2;
constexpr int kUsage = 64;

void add_params(CLI::App* cmd, Params& p) {
    cmd->add_option("--ka", p.ka, "A-class size cap")->required();
    cmd->add_option("--kb", p.kb, "B-class size cap")->required();
    cmd->add_option("--da", p.da, "A-vertex degree cap")->required();
    cmd->add_option("--db", p.db, "B-vertex degree cap")->required();
}

int run_check(const Params& p) {
    long long lhs = 1LL * p.db * p.kb + 1LL * p.da * p.ka;
    long long rhs = 1LL * p.ka * p.kb;
    if (sufficient(p)) {
        std::cout << "SUFFICIENT (" << lhs << " ≤ " << rhs << ")\n";
        return kOk;
    }
    std::cout << "SHARP (" << lhs << " > " << rhs << "), t = " << surplus(p)
              << "\n";
    return kSharp;
}

int run_build(const Params& p, const std::string& out, const std::string& trace,
              const std::string& dot, const std::string& verify) {
    BuildReport report = build_sharp(p);
    const CoverGraph& g = report.built.graph;
    std::cout << "built full (" << p.ka << "," << p.kb << "," << p.da << ","
              << p.db << ")-graph: " << g.count_side_classes(Side::A)
              << " A-classes, " << g.count_side_classes(Side::B)
              << " B-classes, " << g.vertices.size() << " vertices, "
              << g.edges.size() << " edges\n";
    if (!out.empty()) write_graph({g, p, {}, {}}, out);
    if (!trace.empty()) write_trace(report.built.trace, trace);
    if (!dot.empty()) export_dot(g, dot);
    if (verify == "exhaustive") {
        SolveOutcome outcome = find_it(g);
        if (!outcome.no_it()) {
            std::cout << "verification FAILED: transversal found\n";
            return kSharp;
        }
        std::cout << "NO-IT confirmed by exhaustive search (" << outcome.nodes
                  << " nodes)\n";
    } else if (verify == "trace") {
        std::string reason;
        if (!verify_trace(g, report.built.trace, &reason)) {
            std::cout << "verification FAILED: " << reason << "\n";
            return kSharp;
        }
        std::cout << "NO-IT certified by trace replay\n";
    }
    return kOk;
}

int run_solve(const std::string& in, std::int64_t budget) {
    GraphDocument doc = read_graph(in);
    SolveOutcome outcome = find_it(doc.graph, budget);
    switch (outcome.kind) {
        case SolveOutcome::Kind::Found:
            std::cout << "IT";
            for (const auto& [cls, v] : outcome.solution.choice)
                std::cout << " " << cls << ":" << v;
            std::cout << "\n";
            return kOk;
        case SolveOutcome::Kind::NoIT:
            std::cout << "NO-IT (" << outcome.nodes << " nodes)\n";
            return kSharp;
        case SolveOutcome::Kind::BudgetExceeded:
            std::cout << "BUDGET (" << outcome.nodes << " nodes)\n";
            return kBudget;
    }
    return kUsage;
}

int run_certify(const std::string& in, const std::string& trace_path) {
    GraphDocument doc = read_graph(in);
    BuildTrace trace = read_trace(trace_path);
    std::string reason;
    if (verify_trace(doc.graph, trace, &reason)) {
        std::cout << "CERTIFIED: trace replays to the graph; no transversal\n";
        return kOk;
    }
    std::cout << "REJECTED: " << reason << "\n";
    return kSharp;
}

int run_witness(const std::string& in, int max_s) {
    GraphDocument doc = read_graph(in);
    auto witness = find_domination_witness(doc.graph, max_s);
    if (!witness) {
        std::cout << "NO WITNESS up to |S| = " << max_s << "\n";
        return kSharp;
    }
    std::cout << "WITNESS S =";
    for (int c : witness->classes) std::cout << " " << c;
    std::cout << " Z =";
    for (const auto& e : witness->edges)
        std::cout << " (" << e.first << "," << e.second << ")";
    std::cout << "\n";
    return kOk;
}

int run_asym(int d, const std::string& blocks_path, const std::string& out,
             const std::string& strategy, std::uint64_t seed) {
    std::optional<BlockPartition> blocks;
    if (!blocks_path.empty()) {
        GraphDocument doc = read_graph(blocks_path);
        if (doc.blocks.empty())
            throw error("blocks file carries no \"blocks\" entry");
        blocks = BlockPartition{doc.blocks};
    }
    PartitionStrategy strat = strategy == "search"
                                  ? PartitionStrategy::Search
                                  : PartitionStrategy::Construction;
    SearchOptions options;
    options.seed = seed;
    AsymmetricResult res = assemble_sharp_asymmetric(d, blocks, strat, options);
    const CoverGraph& g = res.paired.graph;
    std::cout << "assembled degree-" << d << " instance: "
              << g.count_side_classes(Side::A) << " blocks of size "
              << 2 * d * d - 1 << ", " << res.paired.pairs.size() << " pairs\n";
    if (!out.empty())
        write_graph({g, Params{2 * d * d - 1, 2, d, d}, res.paired.pairs,
                     res.blocks.blocks},
                    out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent-transversal toolkit for partitioned bipartite covers"};
    app.require_subcommand(1);

    Params p;
    auto* check = app.add_subcommand("check", "classify parameters");
    add_params(check, p);

    Params bp;
    std::string out, trace, dot, verify;
    auto* build = app.add_subcommand("build", "build a sharp no-IT instance");
    add_params(build, bp);
    build->add_option("--out", out, "graph JSON output");
    build->add_option("--trace", trace, "replay certificate output");
    build->add_option("--dot", dot, "cluster-graph output");
    build->add_option("--verify", verify, "exhaustive|trace")
        ->check(CLI::IsMember({"exhaustive", "trace"}));

    std::string in;
    std::int64_t budget = kUnlimited;
    auto* solve = app.add_subcommand("solve", "exhaustive transversal search");
    solve->add_option("--in", in, "graph JSON input")->required();
    solve->add_option("--budget", budget, "node budget");

    std::string cin_, ctrace;
    auto* certify = app.add_subcommand("certify", "replay a build certificate");
    certify->add_option("--in", cin_, "graph JSON input")->required();
    certify->add_option("--trace", ctrace, "certificate input")->required();

    std::string win;
    int max_s = 4;
    auto* witness = app.add_subcommand("witness", "find a domination witness");
    witness->add_option("--in", win, "graph JSON input")->required();
    witness->add_option("--max-s", max_s, "largest class-set size tried");

    int d = 1;
    std::string ablocks, aout, astrategy = "construction";
    std::uint64_t seed = 1;
    auto* asym = app.add_subcommand("asym", "assemble the paired sharp instance");
    asym->add_option("--d", d, "degree")->required();
    asym->add_option("--blocks", ablocks, "JSON file supplying \"blocks\"");
    asym->add_option("--out", aout, "graph JSON output");
    asym->add_option("--strategy", astrategy, "construction|search")
        ->check(CLI::IsMember({"construction", "search"}));
    asym->add_option("--seed", seed, "search seed");

    std::string ein, edot;
    auto* exp = app.add_subcommand("export", "render the cluster graph");
    exp->add_option("--in", ein, "graph JSON input")->required();
    exp->add_option("--dot", edot, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kUsage;
    }

    try {
        if (check->parsed()) return run_check(p);
        if (build->parsed()) return run_build(bp, out, trace, dot, verify);
        if (solve->parsed()) return run_solve(in, budget);
        if (certify->parsed()) return run_certify(cin_, ctrace);
        if (witness->parsed()) return run_witness(win, max_s);
        if (asym->parsed()) return run_asym(d, ablocks, aout, astrategy, seed);
        if (exp->parsed()) {
            export_dot(read_graph(ein).graph, edot);
            std::cout << "wrote " << edot << "\n";
            return kOk;
        }
    } catch (const itcover::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSharp;
    }
    return kUsage;
}
