#include "hsnet/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "hsnet/io.hpp"
#include "hsnet/rng.hpp"
#include "hsnet/robustness.hpp"

namespace hsnet {

using nlohmann::json;

namespace {

std::string format_double(double v, int precision = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

void check_label(const std::string& label) {
    if (label.find(',') != std::string::npos) {
        throw std::invalid_argument("labels must not contain commas: '" + label + "'");
    }
}

}  // namespace

std::string NetworkSource::default_label() const {
    std::ostringstream os;
    switch (type) {
        case Type::Modular:
            os << (modular.rewire_p > 0.0 ? "hm" : "mod") << "_n" << modular.n << "_m"
               << modular.modules;
            if (modular.density < 1.0) os << "_d" << modular.density;
            if (modular.rewire_p > 0.0) os << "_p" << modular.rewire_p;
            break;
        case Type::ScaleFree:
            os << "sf_n" << scale_free.n << "_m" << scale_free.m_attach;
            break;
        case Type::DsmFile:
            os << "dsm:" << path.filename().string();
            break;
        case Type::EdgeListFile:
            os << "edges:" << path.filename().string();
            break;
    }
    return os.str();
}

std::string CouplingConfig::default_label() const {
    std::ostringstream os;
    switch (mode) {
        case Mode::Random: os << "rand_q" << q; break;
        case Mode::RandomMatched: os << "rand_matched"; break;
        case Mode::Motif: os << "motif_" << to_string(kind) << "_" << to_string(placement); break;
        case Mode::PatternFile: os << "pattern:" << path.filename().string(); break;
    }
    return os.str();
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

void ExperimentConfig::validate() const {
    if (hw.empty()) throw std::invalid_argument("config needs at least one hw source");
    if (strategies.empty()) throw std::invalid_argument("config needs at least one strategy");
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (sw.empty() != coupling.empty()) {
        throw std::invalid_argument("sw sources and coupling specs must be given together");
    }
    for (const auto& s : hw) check_label(s.label.empty() ? s.default_label() : s.label);
    for (const auto& s : sw) check_label(s.label.empty() ? s.default_label() : s.label);
    for (const auto& c : coupling) check_label(c.label.empty() ? c.default_label() : c.label);
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

NetworkSource parse_source(const json& j, const std::filesystem::path& base_dir) {
    NetworkSource s;
    const std::string type = j.at("type").get<std::string>();
    if (type == "modular") {
        s.type = NetworkSource::Type::Modular;
        s.modular.n = j.at("n").get<NodeId>();
        s.modular.modules = j.at("modules").get<NodeId>();
        s.modular.density = j.value("density", 1.0);
        s.modular.rewire_p = j.value("p", 0.0);
    } else if (type == "scale_free") {
        s.type = NetworkSource::Type::ScaleFree;
        s.scale_free.n = j.at("n").get<NodeId>();
        s.scale_free.m_attach = j.value("m_attach", 2);
        s.scale_free.preprune_fraction = j.value("preprune_fraction", 0.0);
    } else if (type == "dsm" || type == "edgelist") {
        s.type = type == "dsm" ? NetworkSource::Type::DsmFile : NetworkSource::Type::EdgeListFile;
        std::filesystem::path p = j.at("path").get<std::string>();
        s.path = p.is_absolute() ? p : base_dir / p;
    } else {
        throw std::invalid_argument("unknown network source type: " + type);
    }
    s.label = j.value("label", "");
    return s;
}

CouplingConfig parse_coupling(const json& j, const std::filesystem::path& base_dir) {
    CouplingConfig c;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "random") {
        c.mode = CouplingConfig::Mode::Random;
        c.q = j.at("q").get<double>();
    } else if (mode == "random_matched") {
        c.mode = CouplingConfig::Mode::RandomMatched;
    } else if (mode == "motif") {
        c.mode = CouplingConfig::Mode::Motif;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "bus") c.kind = MotifKind::Bus;
        else if (kind == "ring") c.kind = MotifKind::Ring;
        else if (kind == "star") c.kind = MotifKind::Star;
        else throw std::invalid_argument("unknown motif kind: " + kind);
        const std::string placement = j.value("placement", "tile");
        if (placement == "tile") c.placement = MotifPlacement::TileDiagonal;
        else if (placement == "single") c.placement = MotifPlacement::SingleBlock;
        else throw std::invalid_argument("unknown placement: " + placement);
    } else if (mode == "pattern_file") {
        c.mode = CouplingConfig::Mode::PatternFile;
        std::filesystem::path p = j.at("path").get<std::string>();
        c.path = p.is_absolute() ? p : base_dir / p;
        const std::string placement = j.value("placement", "tile");
        c.placement = placement == "single" ? MotifPlacement::SingleBlock
                                            : MotifPlacement::TileDiagonal;
    } else {
        throw std::invalid_argument("unknown coupling mode: " + mode);
    }
    c.label = j.value("label", "");
    return c;
}

template <typename T, typename F>
std::vector<T> parse_one_or_many(const json& j, F parse) {
    std::vector<T> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(parse(item));
    } else {
        out.push_back(parse(j));
    }
    return out;
}

}  // namespace

ExperimentConfig parse_experiment_config_json(const std::string& json_text,
                                              const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
    }

    ExperimentConfig cfg;
    auto src = [&](const json& item) { return parse_source(item, base_dir); };
    auto cpl = [&](const json& item) { return parse_coupling(item, base_dir); };

    cfg.hw = parse_one_or_many<NetworkSource>(j.at("hw"), src);
    if (j.contains("sw")) cfg.sw = parse_one_or_many<NetworkSource>(j.at("sw"), src);
    if (j.contains("coupling")) {
        cfg.coupling = parse_one_or_many<CouplingConfig>(j.at("coupling"), cpl);
    }
    for (const auto& name : j.at("strategies")) {
        AttackStrategy s;
        s.kind = attack_kind_from_string(name.get<std::string>());
        cfg.strategies.push_back(s);
    }
    cfg.replicas = j.value("replicas", 1);
    cfg.base_seed = j.value("base_seed", std::uint64_t{0});
    cfg.threads = j.value("threads", 0u);
    if (j.value("tie_break", "lowest_id") == std::string("seeded")) {
        cfg.tie_break = AttackOptions::TieBreak::Seeded;
    }
    if (j.contains("output")) {
        const auto& out = j.at("output");
        std::filesystem::path p = out.at("path").get<std::string>();
        cfg.output_path = p.is_absolute() ? p : base_dir / p;
        const std::string fmt = out.value("format", "csv");
        if (fmt == "csv") cfg.output_format = OutputFormat::Csv;
        else if (fmt == "json") cfg.output_format = OutputFormat::Json;
        else throw std::invalid_argument("unknown output format: " + fmt);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config_json(buf.str(), path.parent_path().empty()
                                                       ? std::filesystem::path(".")
                                                       : path.parent_path());
}

// ---------------------------------------------------------------------------
// realization and the grid runner

Graph realize_network(const NetworkSource& source, std::uint64_t replica_seed, const char* stream) {
    switch (source.type) {
        case NetworkSource::Type::Modular: {
            ModularSpec spec = source.modular;
            spec.seed = derive_seed(replica_seed, stream);
            return spec.rewire_p > 0.0 ? generate_hierarchical_modular(spec)
                                       : generate_modular(spec);
        }
        case NetworkSource::Type::ScaleFree: {
            ScaleFreeSpec spec = source.scale_free;
            spec.seed = derive_seed(replica_seed, stream);
            return generate_scale_free(spec);
        }
        case NetworkSource::Type::DsmFile: {
            DsmReadInfo info;
            return read_dsm(source.path, &info);
        }
        case NetworkSource::Type::EdgeListFile:
            return read_edge_list(source.path);
    }
    throw std::logic_error("unhandled source type");
}

namespace {

CouplingMatrix realize_coupling(const CouplingConfig& c, NodeId n_hw, NodeId n_sw,
                                std::uint64_t replica_seed) {
    switch (c.mode) {
        case CouplingConfig::Mode::Random:
            return random_coupling(n_hw, n_sw, c.q, derive_seed(replica_seed, "coupling"));
        case CouplingConfig::Mode::RandomMatched: {
            double bits = 0.0;
            for (MotifKind kind : {MotifKind::Bus, MotifKind::Ring, MotifKind::Star}) {
                bits += static_cast<double>(
                    motif_coupling(n_hw, n_sw, kind, MotifPlacement::TileDiagonal).popcount());
            }
            const double q = bits / 3.0 /
                             (static_cast<double>(n_hw) * static_cast<double>(n_sw));
            return random_coupling(n_hw, n_sw, q, derive_seed(replica_seed, "coupling"));
        }
        case CouplingConfig::Mode::Motif:
            return motif_coupling(n_hw, n_sw, c.kind, c.placement);
        case CouplingConfig::Mode::PatternFile: {
            const auto pattern = load_pattern_file(c.path);
            return pattern_coupling(n_hw, n_sw, pattern, c.placement);
        }
    }
    throw std::logic_error("unhandled coupling mode");
}

}  // namespace

Graph realize_cell_graph(const NetworkSource& hw, const NetworkSource* sw,
                         const CouplingConfig* coupling, std::uint64_t replica_seed) {
    Graph hw_graph = realize_network(hw, replica_seed, "hw");
    if (!sw) return hw_graph;
    Graph sw_graph = realize_network(*sw, replica_seed, "sw");
    const CouplingMatrix b =
        realize_coupling(*coupling, hw_graph.node_count(), sw_graph.node_count(), replica_seed);
    return compose_interdependent(hw_graph, sw_graph, b).graph;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    struct CellDef {
        const NetworkSource* hw;
        const NetworkSource* sw;        // null for single-layer cells
        const CouplingConfig* coupling; // null for single-layer cells
        AttackStrategy strategy;
        std::string hw_label, sw_label, coupling_label, strategy_label;
    };

    std::vector<CellDef> cells;
    auto add_cells = [&](const NetworkSource& hw, const NetworkSource* sw,
                         const CouplingConfig* coupling) {
        for (const auto& strategy : config.strategies) {
            CellDef def;
            def.hw = &hw;
            def.sw = sw;
            def.coupling = coupling;
            def.strategy = strategy;
            def.hw_label = hw.label.empty() ? hw.default_label() : hw.label;
            def.sw_label = sw ? (sw->label.empty() ? sw->default_label() : sw->label) : "-";
            def.coupling_label =
                coupling ? (coupling->label.empty() ? coupling->default_label() : coupling->label)
                         : "-";
            def.strategy_label = to_string(strategy.kind);
            cells.push_back(std::move(def));
        }
    };
    for (const auto& hw : config.hw) {
        if (config.sw.empty()) {
            add_cells(hw, nullptr, nullptr);
        } else {
            for (const auto& sw : config.sw) {
                for (const auto& coupling : config.coupling) add_cells(hw, &sw, &coupling);
            }
        }
    }

    const std::size_t replicas = static_cast<std::size_t>(config.replicas);
    const std::size_t task_count = cells.size() * replicas;
    std::vector<double> values(task_count, 0.0);
    std::vector<std::uint8_t> ok(task_count, 0);
    std::vector<std::string> errors(task_count);

    auto run_task = [&](std::size_t task) {
        const std::size_t cell_idx = task / replicas;
        const int replica = static_cast<int>(task % replicas);
        const CellDef& def = cells[cell_idx];
        const std::uint64_t replica_seed = config.base_seed + static_cast<std::uint64_t>(replica);
        try {
            Graph g = realize_cell_graph(*def.hw, def.sw, def.coupling, replica_seed);
            AttackStrategy strategy = def.strategy;
            if (strategy.kind == AttackKind::Random) {
                strategy.seed = derive_seed(replica_seed, "attack");
            }
            AttackOptions options;
            options.tie_break = config.tie_break;
            options.tie_seed = derive_seed(replica_seed, "tie");
            const AttackTrace trace = attack_sequence(std::move(g), strategy, options);
            values[task] = robustness_coefficient(trace).r_percent;
            ok[task] = 1;
        } catch (const std::exception& e) {
            errors[task] = e.what();
        }
    };

    unsigned thread_count = config.threads ? config.threads : std::thread::hardware_concurrency();
    if (thread_count == 0) thread_count = 1;
    thread_count = static_cast<unsigned>(
        std::min<std::size_t>(thread_count, std::max<std::size_t>(task_count, 1)));

    if (thread_count <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(thread_count);
        for (unsigned w = 0; w < thread_count; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < task_count; t = next.fetch_add(1)) {
                    run_task(t);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    ExperimentResult result;
    for (std::size_t cell_idx = 0; cell_idx < cells.size(); ++cell_idx) {
        const CellDef& def = cells[cell_idx];
        ResultCell cell;
        cell.hw = def.hw_label;
        cell.sw = def.sw_label;
        cell.coupling = def.coupling_label;
        cell.strategy = def.strategy_label;
        for (std::size_t r = 0; r < replicas; ++r) {
            const std::size_t task = cell_idx * replicas + r;
            if (ok[task]) {
                cell.values.push_back(values[task]);
            } else {
                result.failures.push_back({cell.hw, cell.sw, cell.coupling, cell.strategy,
                                           static_cast<int>(r), errors[task]});
            }
        }
        if (cell.values.empty()) continue;  // fully failed cell: manifest only
        cell.replicas = static_cast<int>(cell.values.size());
        double sum = 0.0;
        for (double v : cell.values) sum += v;
        cell.mean = sum / static_cast<double>(cell.values.size());
        if (cell.values.size() > 1) {
            double ss = 0.0;
            for (double v : cell.values) ss += (v - cell.mean) * (v - cell.mean);
            cell.stddev = std::sqrt(ss / static_cast<double>(cell.values.size() - 1));
        }
        result.table.cells.push_back(std::move(cell));
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (config.output_path) {
        if (!result.table.cells.empty()) {
            write_results(result.table, *config.output_path, config.output_format);
        }
        if (!result.failures.empty()) {
            json manifest = json::array();
            for (const auto& f : result.failures) {
                manifest.push_back({{"hw", f.hw},
                                    {"sw", f.sw},
                                    {"coupling", f.coupling},
                                    {"strategy", f.strategy},
                                    {"replica", f.replica},
                                    {"error", f.error}});
            }
            std::filesystem::path manifest_path = *config.output_path;
            manifest_path += ".failures.json";
            std::ofstream out(manifest_path);
            if (!out) throw std::runtime_error("cannot write " + manifest_path.string());
            out << json{{"failures", manifest}}.dump(2) << "\n";
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// result serialization

const ResultCell* ResultTable::find(const std::string& hw, const std::string& sw,
                                    const std::string& coupling,
                                    const std::string& strategy) const {
    for (const auto& c : cells) {
        if (c.hw == hw && c.sw == sw && c.coupling == coupling && c.strategy == strategy) return &c;
    }
    return nullptr;
}

void write_results(const ResultTable& table, const std::filesystem::path& path,
                   OutputFormat format) {
    if (table.cells.empty()) throw std::invalid_argument("refusing to write an empty result table");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write results to " + path.string());

    if (format == OutputFormat::Csv) {
        out << "hw,sw,coupling,strategy,mean,std,n\n";
        for (const auto& c : table.cells) {
            out << c.hw << "," << c.sw << "," << c.coupling << "," << c.strategy << ","
                << format_double(c.mean) << "," << format_double(c.stddev) << "," << c.replicas
                << "\n";
        }
    } else {
        json cells = json::array();
        for (const auto& c : table.cells) {
            json values = json::array();
            for (double v : c.values) values.push_back(round4(v));
            cells.push_back({{"hw", c.hw},
                             {"sw", c.sw},
                             {"coupling", c.coupling},
                             {"strategy", c.strategy},
                             {"mean", round4(c.mean)},
                             {"std", round4(c.stddev)},
                             {"n", c.replicas},
                             {"values", values}});
        }
        out << json{{"results", cells}}.dump(2) << "\n";
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

ResultTable read_results_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results: " + path.string());
    json j;
    in >> j;
    ResultTable table;
    for (const auto& item : j.at("results")) {
        ResultCell c;
        c.hw = item.at("hw").get<std::string>();
        c.sw = item.at("sw").get<std::string>();
        c.coupling = item.at("coupling").get<std::string>();
        c.strategy = item.at("strategy").get<std::string>();
        c.mean = item.at("mean").get<double>();
        c.stddev = item.at("std").get<double>();
        c.replicas = item.at("n").get<int>();
        for (const auto& v : item.at("values")) c.values.push_back(v.get<double>());
        table.cells.push_back(std::move(c));
    }
    return table;
}

}  // namespace hsnet
