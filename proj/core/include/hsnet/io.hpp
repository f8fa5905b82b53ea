#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hsnet/attack.hpp"
#include "hsnet/graph.hpp"

namespace hsnet {

// Edge-list format: first line "n <count>", then one "u v" pair per line,
// 0-based ids. Graphs with removed nodes cannot be written (the format has
// no notion of a tombstoned id).
Graph read_edge_list(const std::filesystem::path& path);
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>");
void write_edge_list(const Graph& g, const std::filesystem::path& path);

struct DsmReadInfo {
    bool symmetrized = false;      ///< input had asymmetric cells, OR-ed together
    std::size_t asymmetric_cells = 0;
    bool had_label_header = false;
};

/// Reads a square 0/1 design-structure matrix, comma- or whitespace-
/// separated, with an optional single header row/column of labels. The
/// diagonal is ignored; asymmetric inputs are symmetrized by logical OR
/// (reported through `info`, or warned on stderr when info is null).
Graph read_dsm(const std::filesystem::path& path, DsmReadInfo* info = nullptr);
void write_dsm(const Graph& g, const std::filesystem::path& path);

/// Reads either format, deciding by the leading "n <count>" line.
Graph read_graph_auto(const std::filesystem::path& path);

// Attack traces: "# strategy: <name>" comment, a "step removed" header, one
// "k id" line per removal, and a final "s_series S_0 .. S_N" line.
void write_trace(const AttackTrace& trace, const std::filesystem::path& path);
AttackTrace read_trace(const std::filesystem::path& path);

}  // namespace hsnet
