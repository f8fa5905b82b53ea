#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hsnet/layered.hpp"

namespace hsnet {

/// Built-in embedded-system interconnect architectures expressed as 6x6
/// adjacency bit patterns.
enum class MotifKind { Bus, Ring, Star };

enum class MotifPlacement {
    /// Stamp the 6x6 pattern repeatedly at offsets (6t, 6t) down the
    /// diagonal of the coupling block. Default.
    TileDiagonal,
    /// One pattern scaled up to k = min(rows, cols) positions, stamped at
    /// the origin.
    SingleBlock,
};

/// The canonical 6x6 bit pattern for a built-in architecture.
const std::array<std::array<std::uint8_t, 6>, 6>& motif_pattern(MotifKind kind);

std::string to_string(MotifKind kind);
std::string to_string(MotifPlacement placement);

/// Each coupling bit set independently with probability q.
CouplingMatrix random_coupling(NodeId n_hw, NodeId n_sw, double q, std::uint64_t seed);

/// Coupling block patterned after a named architecture. Requires both
/// dimensions >= 6.
CouplingMatrix motif_coupling(NodeId n_hw, NodeId n_sw, MotifKind kind,
                              MotifPlacement placement = MotifPlacement::TileDiagonal);

/// User-defined pattern: a rectangular 0/1 matrix, one row per line, bits
/// separated by spaces. TileDiagonal tiles it down the diagonal;
/// SingleBlock stamps it once at the origin.
std::vector<std::vector<std::uint8_t>> load_pattern_file(const std::filesystem::path& path);
CouplingMatrix pattern_coupling(NodeId n_hw, NodeId n_sw,
                                std::span<const std::vector<std::uint8_t>> pattern,
                                MotifPlacement placement = MotifPlacement::TileDiagonal);

/// Reorders which hardware node each pattern row couples (and likewise for
/// software columns). Permutations must be valid over [0, rows) / [0, cols);
/// entry (i, j) of the result equals entry (row_perm[i], col_perm[j]) of m.
CouplingMatrix apply_permutation(const CouplingMatrix& m, std::span<const NodeId> row_perm,
                                 std::span<const NodeId> col_perm);

}  // namespace hsnet
