// hsnet command line: synthesize networks, run sustained attacks, replay
// stored traces and drive declarative experiment grids.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hsnet/attack.hpp"
#include "hsnet/experiment.hpp"
#include "hsnet/generators.hpp"
#include "hsnet/io.hpp"
#include "hsnet/robustness.hpp"

namespace {

using namespace hsnet;

int run_generate(const std::string& type, NodeId n, NodeId modules, double density, double p,
                 NodeId m_attach, double preprune, std::uint64_t seed, const std::string& out) {
    Graph g;
    if (type == "modular") {
        const ModularSpec spec{n, modules, density, p, seed};
        g = p > 0.0 ? generate_hierarchical_modular(spec) : generate_modular(spec);
    } else if (type == "scale-free") {
        g = generate_scale_free({n, m_attach, seed, preprune});
    } else {
        std::cerr << "unknown generator type: " << type << "\n";
        return 1;
    }
    write_edge_list(g, out);
    std::cout << "wrote " << g.node_count() << " nodes, " << g.edge_count() << " edges to " << out
              << "\n";
    return 0;
}

int run_attack(const std::string& graph_file, const std::string& strategy_name, std::uint64_t seed,
               const std::optional<std::string>& trace_out, bool seeded_ties,
               std::uint64_t tie_seed) {
    const Graph g = read_graph_auto(graph_file);
    AttackStrategy strategy;
    strategy.kind = attack_kind_from_string(strategy_name);
    strategy.seed = seed;
    AttackOptions options;
    if (seeded_ties) {
        options.tie_break = AttackOptions::TieBreak::Seeded;
        options.tie_seed = tie_seed;
    }
    const AttackTrace trace = attack_sequence(g, strategy, options);
    const auto r = robustness_coefficient(trace);
    if (trace_out) write_trace(trace, *trace_out);
    std::cout << std::fixed << std::setprecision(4) << "strategy=" << strategy_name
              << " n=" << r.n << " R=" << r.r_percent << "\n";
    return 0;
}

int run_replay(const std::string& graph_file, const std::string& trace_file) {
    const Graph g = read_graph_auto(graph_file);
    const AttackTrace trace = read_trace(trace_file);
    const auto series = replay_trace(g, trace.removed);
    const bool match = series == trace.s_series;
    const auto r = robustness_from_series(series);
    std::cout << std::fixed << std::setprecision(4) << "replayed n=" << r.n
              << " R=" << r.r_percent << " stored_series_match=" << (match ? "yes" : "no") << "\n";
    return match ? 0 : 2;
}

int run_experiment_cmd(const std::string& config_file, const std::optional<std::string>& out,
                       const std::optional<std::string>& format,
                       const std::optional<std::uint64_t>& seed, const std::optional<int>& replicas,
                       unsigned threads) {
    ExperimentConfig cfg = parse_experiment_config(config_file);
    if (out) cfg.output_path = *out;
    if (format) {
        if (*format == "csv") cfg.output_format = OutputFormat::Csv;
        else if (*format == "json") cfg.output_format = OutputFormat::Json;
        else {
            std::cerr << "unknown format: " << *format << "\n";
            return 1;
        }
    }
    if (seed) cfg.base_seed = *seed;
    if (replicas) cfg.replicas = *replicas;
    if (threads) cfg.threads = threads;
    if (!cfg.output_path) {
        std::cerr << "no output path: set output.path in the config or pass --out\n";
        return 1;
    }

    const auto result = run_experiment(cfg);
    if (result.table.cells.empty()) {
        std::cerr << "no cell produced a result; see " << cfg.output_path->string()
                  << ".failures.json\n";
        return 2;
    }
    std::cout << "wrote " << result.table.cells.size() << " cells to "
              << cfg.output_path->string() << " in " << std::fixed << std::setprecision(1)
              << result.wall_seconds << "s\n";
    if (!result.failures.empty()) {
        std::cerr << result.failures.size() << " replica runs failed; see the failure manifest\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interdependent hardware-software network robustness toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a synthetic network as an edge-list file");
    std::string gen_type = "scale-free";
    NodeId gen_n = 100, gen_modules = 5, gen_m = 2;
    double gen_density = 1.0, gen_p = 0.0, gen_preprune = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "graph.edges";
    gen->add_option("--type", gen_type, "modular | scale-free")->capture_default_str();
    gen->add_option("--n", gen_n, "node count")->capture_default_str();
    gen->add_option("--modules", gen_modules, "module count (modular)")->capture_default_str();
    gen->add_option("--density", gen_density, "intra-module density (modular)")->capture_default_str();
    gen->add_option("--p", gen_p, "rewiring probability (modular)")->capture_default_str();
    gen->add_option("--m-attach", gen_m, "edges per arriving node (scale-free)")->capture_default_str();
    gen->add_option("--preprune", gen_preprune, "post-generation uniform node deletion fraction")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output edge-list path")->capture_default_str();

    // attack
    auto* atk = app.add_subcommand("attack", "run one sustained attack and report R");
    std::string atk_graph, atk_strategy = "betweenness";
    std::uint64_t atk_seed = 0, atk_tie_seed = 0;
    bool atk_seeded_ties = false;
    std::optional<std::string> atk_trace_out;
    atk->add_option("graph", atk_graph, "edge-list or DSM file")->required();
    atk->add_option("--strategy", atk_strategy, "degree | betweenness | closeness | random")
        ->capture_default_str();
    atk->add_option("--seed", atk_seed, "seed for the random strategy")->capture_default_str();
    atk->add_option("--trace-out", atk_trace_out, "write the attack trace here");
    atk->add_flag("--seeded-ties", atk_seeded_ties, "break centrality ties randomly");
    atk->add_option("--tie-seed", atk_tie_seed, "seed for --seeded-ties")->capture_default_str();

    // replay
    auto* rep = app.add_subcommand("replay", "re-verify a stored trace against its graph");
    std::string rep_graph, rep_trace;
    rep->add_option("graph", rep_graph, "edge-list or DSM file")->required();
    rep->add_option("trace", rep_trace, "trace file")->required();

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a declarative experiment grid");
    std::string exp_config;
    std::optional<std::string> exp_out, exp_format;
    std::optional<std::uint64_t> exp_seed;
    std::optional<int> exp_replicas;
    unsigned exp_threads = 0;
    exp->add_option("config", exp_config, "JSON experiment config")->required();
    exp->add_option("--out", exp_out, "override output path");
    exp->add_option("--format", exp_format, "csv | json");
    exp->add_option("--seed", exp_seed, "override base seed");
    exp->add_option("--replicas", exp_replicas, "override replica count");
    exp->add_option("--threads", exp_threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return run_generate(gen_type, gen_n, gen_modules, gen_density, gen_p, gen_m,
                                gen_preprune, gen_seed, gen_out);
        }
        if (atk->parsed()) {
            return run_attack(atk_graph, atk_strategy, atk_seed, atk_trace_out, atk_seeded_ties,
                              atk_tie_seed);
        }
        if (rep->parsed()) return run_replay(rep_graph, rep_trace);
        if (exp->parsed()) {
            return run_experiment_cmd(exp_config, exp_out, exp_format, exp_seed, exp_replicas,
                                      exp_threads);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
