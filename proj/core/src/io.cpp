#include "hsnet/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hsnet {

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    return in;
}

std::ofstream create_or_throw(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    return out;
}

void require_fully_active(const Graph& g, const char* what) {
    if (g.active_count() != g.node_count()) {
        throw std::invalid_argument(std::string(what) + ": graphs with removed nodes are not representable");
    }
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ls(normalized);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
}

bool is_binary_token(const std::string& t) { return t == "0" || t == "1"; }

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t line_no = 0;
    NodeId n = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            long long count = -1;
            if (!(ls >> tag >> count) || tag != "n" || count < 0) {
                parse_fail(name, line_no, "expected header 'n <count>'");
            }
            n = static_cast<NodeId>(count);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) parse_fail(name, line_no, "expected edge 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            parse_fail(name, line_no, "edge endpoint out of range");
        }
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (n < 0) throw std::runtime_error(name + ": missing 'n <count>' header");
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_edge_list(in, path.string());
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    require_fully_active(g, "write_edge_list");
    auto out = create_or_throw(path);
    out << "n " << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Graph read_dsm(const std::filesystem::path& path, DsmReadInfo* info) {
    auto in = open_or_throw(path);
    const std::string name = path.string();

    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        rows.push_back(std::move(toks));
        row_lines.push_back(line_no);
    }
    if (rows.empty()) throw std::runtime_error(name + ": empty matrix");

    DsmReadInfo local;

    // optional label header row: any non-binary token in the first row
    if (!std::all_of(rows.front().begin(), rows.front().end(), is_binary_token)) {
        local.had_label_header = true;
        rows.erase(rows.begin());
        row_lines.erase(row_lines.begin());
        if (rows.empty()) throw std::runtime_error(name + ": header without matrix rows");
    }
    // optional label column: every remaining row starts with a non-binary token
    const bool label_col = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
        return !r.empty() && !is_binary_token(r.front());
    });
    if (label_col) {
        local.had_label_header = true;
        for (auto& r : rows) r.erase(r.begin());
    }

    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            parse_fail(name, row_lines[i],
                       "matrix is not square: row has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
        }
    }

    std::vector<std::uint8_t> cell(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& t = rows[i][j];
            if (!is_binary_token(t)) {
                parse_fail(name, row_lines[i],
                           "non-binary entry '" + t + "' at column " + std::to_string(j + 1));
            }
            cell[i * n + j] = t == "1" ? 1 : 0;
        }
    }

    Graph g(static_cast<NodeId>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool a = cell[i * n + j] != 0;
            const bool b = cell[j * n + i] != 0;
            if (a != b) {
                local.symmetrized = true;
                ++local.asymmetric_cells;
            }
            if (a || b) g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }

    if (local.symmetrized && !info) {
        std::cerr << "warning: " << name << " is asymmetric in " << local.asymmetric_cells
                  << " cell(s); symmetrized by logical OR\n";
    }
    if (info) *info = local;
    return g;
}

void write_dsm(const Graph& g, const std::filesystem::path& path) {
    require_fully_active(g, "write_dsm");
    auto out = create_or_throw(path);
    const NodeId n = g.node_count();
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            out << (j ? " " : "") << (i != j && g.has_edge(i, j) ? 1 : 0);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Graph read_graph_auto(const std::filesystem::path& path) {
    {
        auto in = open_or_throw(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string tag;
            long long count;
            if ((ls >> tag >> count) && tag == "n") return read_edge_list(path);
            break;
        }
    }
    return read_dsm(path);
}

void write_trace(const AttackTrace& trace, const std::filesystem::path& path) {
    auto out = create_or_throw(path);
    out << "# strategy: " << to_string(trace.strategy.kind);
    if (trace.strategy.kind == AttackKind::Random) out << " seed=" << trace.strategy.seed;
    out << "\n";
    out << "step removed\n";
    for (std::size_t k = 0; k < trace.removed.size(); ++k) {
        out << (k + 1) << " " << trace.removed[k] << "\n";
    }
    out << "s_series";
    for (NodeId s : trace.s_series) out << " " << s;
    out << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

AttackTrace read_trace(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string name = path.string();
    AttackTrace trace;
    std::string line;
    std::size_t line_no = 0;
    bool saw_series = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line);
            std::string hash, key, value;
            if (ls >> hash >> key >> value && key == "strategy:") {
                trace.strategy.kind = attack_kind_from_string(value);
                std::string extra;
                if (ls >> extra && extra.rfind("seed=", 0) == 0) {
                    trace.strategy.seed = std::stoull(extra.substr(5));
                }
            }
            continue;
        }
        if (line.rfind("step", 0) == 0) continue;
        if (line.rfind("s_series", 0) == 0) {
            std::istringstream ls(line);
            std::string tag;
            ls >> tag;
            long long s;
            while (ls >> s) trace.s_series.push_back(static_cast<NodeId>(s));
            saw_series = true;
            continue;
        }
        std::istringstream ls(line);
        long long step, id;
        if (!(ls >> step >> id)) parse_fail(name, line_no, "expected 'step id'");
        if (step != static_cast<long long>(trace.removed.size()) + 1) {
            parse_fail(name, line_no, "steps must be consecutive from 1");
        }
        trace.removed.push_back(static_cast<NodeId>(id));
    }
    if (!saw_series) throw std::runtime_error(name + ": missing s_series line");
    if (trace.s_series.size() != trace.removed.size() + 1) {
        throw std::runtime_error(name + ": s_series length does not match removal count");
    }
    return trace;
}

}  // namespace hsnet
