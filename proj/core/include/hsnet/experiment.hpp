#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsnet/attack.hpp"
#include "hsnet/coupling.hpp"
#include "hsnet/generators.hpp"
#include "hsnet/graph.hpp"

namespace hsnet {

/// Where a layer's graph comes from: one of the synthetic generators or a
/// file on disk.
struct NetworkSource {
    enum class Type { Modular, ScaleFree, DsmFile, EdgeListFile };
    Type type = Type::Modular;
    ModularSpec modular;      // Modular (rewire_p selects the plain/rewired variant)
    ScaleFreeSpec scale_free; // ScaleFree
    std::filesystem::path path;  // DsmFile / EdgeListFile
    std::string label;

    std::string default_label() const;
};

struct CouplingConfig {
    enum class Mode {
        Random,         ///< independent bits with probability q
        RandomMatched,  ///< q chosen so the expected bit count matches the
                        ///< mean of the three built-in motifs on the same section
        Motif,
        PatternFile,
    };
    Mode mode = Mode::Random;
    double q = 0.1;
    MotifKind kind = MotifKind::Bus;
    MotifPlacement placement = MotifPlacement::TileDiagonal;
    std::filesystem::path path;
    std::string label;

    std::string default_label() const;
};

enum class OutputFormat { Csv, Json };

/// Declarative experiment: the cartesian grid of hardware sources x software
/// sources x couplings x strategies, each cell run `replicas` times.
/// Software sources and couplings may be absent, in which case the hardware
/// networks are attacked on their own.
struct ExperimentConfig {
    std::vector<NetworkSource> hw;
    std::vector<NetworkSource> sw;          // may be empty
    std::vector<CouplingConfig> coupling;   // must match sw presence
    std::vector<AttackStrategy> strategies; // seeds assigned per replica at run time
    int replicas = 1;
    std::uint64_t base_seed = 0;
    AttackOptions::TieBreak tie_break = AttackOptions::TieBreak::LowestId;
    std::optional<std::filesystem::path> output_path;
    OutputFormat output_format = OutputFormat::Csv;
    unsigned threads = 0;  ///< 0 = hardware concurrency

    void validate() const;
};

ExperimentConfig parse_experiment_config(const std::filesystem::path& path);
ExperimentConfig parse_experiment_config_json(const std::string& json_text,
                                              const std::filesystem::path& base_dir = ".");

struct ResultCell {
    std::string hw;
    std::string sw;        // "-" when attacking a single layer
    std::string coupling;  // "-" when attacking a single layer
    std::string strategy;
    double mean = 0.0;
    double stddev = 0.0;
    int replicas = 0;
    std::vector<double> values;  ///< per-replica robustness coefficients
};

struct ResultTable {
    std::vector<ResultCell> cells;

    const ResultCell* find(const std::string& hw, const std::string& sw,
                           const std::string& coupling, const std::string& strategy) const;
};

struct CellFailure {
    std::string hw, sw, coupling, strategy;
    int replica = 0;
    std::string error;
};

struct ExperimentResult {
    ResultTable table;
    std::vector<CellFailure> failures;
    double wall_seconds = 0.0;
};

/// Runs the full grid. Replica r of every cell derives its seeds from
/// base_seed + r, so reruns of the same config are bit-identical. Cells run
/// in parallel; failures are collected per (cell, replica) and surviving
/// replicas still aggregate. If config.output_path is set the table is
/// written there, plus a "<path>.failures.json" manifest when anything
/// failed.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV: fixed column order (hw, sw, coupling, strategy, mean, std, n), 4
/// decimal places. JSON: one record per cell under "results", including the
/// per-replica values.
void write_results(const ResultTable& table, const std::filesystem::path& path, OutputFormat format);
ResultTable read_results_json(const std::filesystem::path& path);

std::string to_string(OutputFormat format);

/// The per-replica graph/coupling realization used by run_experiment,
/// exposed so single runs can be reproduced outside the grid runner.
Graph realize_network(const NetworkSource& source, std::uint64_t replica_seed, const char* stream);
Graph realize_cell_graph(const NetworkSource& hw, const NetworkSource* sw,
                         const CouplingConfig* coupling, std::uint64_t replica_seed);

}  // namespace hsnet
