#include "hsnet/coupling.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hsnet/rng.hpp"

namespace hsnet {

namespace {

using Pattern6 = std::array<std::array<std::uint8_t, 6>, 6>;

// Backbone 0-1-2-3 with stubs 4->0 and 5->1.
constexpr Pattern6 kBusPattern = {{
    {0, 1, 0, 0, 1, 0},
    {1, 0, 1, 0, 0, 1},
    {0, 1, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0},
}};

// 6-cycle.
constexpr Pattern6 kRingPattern = {{
    {0, 1, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 0},
    {0, 1, 0, 1, 0, 0},
    {0, 0, 1, 0, 1, 0},
    {0, 0, 0, 1, 0, 1},
    {1, 0, 0, 0, 1, 0},
}};

// Hub at position 0.
constexpr Pattern6 kStarPattern = {{
    {0, 1, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
}};

void require_min_section(NodeId n_hw, NodeId n_sw) {
    if (n_hw < 6 || n_sw < 6) {
        throw std::invalid_argument("coupling section " + std::to_string(n_hw) + "x" +
                                    std::to_string(n_sw) + " cannot hold a 6x6 pattern");
    }
}

void stamp6(CouplingMatrix& m, const Pattern6& p, NodeId row0, NodeId col0) {
    for (NodeId i = 0; i < 6; ++i) {
        for (NodeId j = 0; j < 6; ++j) {
            if (p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                m.set(row0 + i, col0 + j, true);
            }
        }
    }
}

void set_symmetric(CouplingMatrix& m, NodeId a, NodeId b) {
    m.set(a, b, true);
    m.set(b, a, true);
}

// Scaled-up variants over k positions. Ring(k) is the k-cycle and Star(k)
// the k-star, both of which reduce to the canonical 6x6 pattern at k = 6.
// Bus(k) is a backbone path on ceil(k/2) positions with the remaining
// positions attached as stubs, one per backbone node from the start; at
// k = 6 that layout is isomorphic to the canonical pattern but indexes the
// positions differently, so k = 6 stamps the canonical bits verbatim.
void single_block(CouplingMatrix& m, MotifKind kind, NodeId k) {
    if (k == 6) {
        stamp6(m, motif_pattern(kind), 0, 0);
        return;
    }
    switch (kind) {
        case MotifKind::Ring:
            for (NodeId i = 0; i < k; ++i) set_symmetric(m, i, (i + 1) % k);
            break;
        case MotifKind::Star:
            for (NodeId i = 1; i < k; ++i) set_symmetric(m, 0, i);
            break;
        case MotifKind::Bus: {
            const NodeId backbone = (k + 1) / 2;
            for (NodeId i = 0; i + 1 < backbone; ++i) set_symmetric(m, i, i + 1);
            for (NodeId s = backbone; s < k; ++s) set_symmetric(m, s, s - backbone);
            break;
        }
    }
}

}  // namespace

const Pattern6& motif_pattern(MotifKind kind) {
    switch (kind) {
        case MotifKind::Bus: return kBusPattern;
        case MotifKind::Ring: return kRingPattern;
        case MotifKind::Star: return kStarPattern;
    }
    throw std::invalid_argument("unknown motif kind");
}

std::string to_string(MotifKind kind) {
    switch (kind) {
        case MotifKind::Bus: return "bus";
        case MotifKind::Ring: return "ring";
        case MotifKind::Star: return "star";
    }
    return "?";
}

std::string to_string(MotifPlacement placement) {
    return placement == MotifPlacement::TileDiagonal ? "tile" : "single";
}

CouplingMatrix random_coupling(NodeId n_hw, NodeId n_sw, double q, std::uint64_t seed) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("coupling probability must be in [0, 1]");
    if (n_hw < 0 || n_sw < 0) throw std::invalid_argument("coupling dimensions must be non-negative");
    CouplingMatrix m(n_hw, n_sw);
    Rng rng(derive_seed(seed, "random_coupling"));
    for (auto& bit : m.bits) bit = rng.bernoulli(q) ? 1 : 0;
    return m;
}

CouplingMatrix motif_coupling(NodeId n_hw, NodeId n_sw, MotifKind kind, MotifPlacement placement) {
    require_min_section(n_hw, n_sw);
    CouplingMatrix m(n_hw, n_sw);
    const NodeId k = std::min(n_hw, n_sw);
    if (placement == MotifPlacement::TileDiagonal) {
        const auto& p = motif_pattern(kind);
        for (NodeId t = 0; t < k / 6; ++t) stamp6(m, p, 6 * t, 6 * t);
    } else {
        single_block(m, kind, k);
    }
    return m;
}

std::vector<std::vector<std::uint8_t>> load_pattern_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path.string());
    std::vector<std::vector<std::uint8_t>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::uint8_t> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "0") {
                row.push_back(0);
            } else if (tok == "1") {
                row.push_back(1);
            } else {
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": pattern entries must be 0 or 1, got '" + tok + "'");
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": ragged pattern row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("pattern file is empty: " + path.string());
    return rows;
}

CouplingMatrix pattern_coupling(NodeId n_hw, NodeId n_sw,
                                std::span<const std::vector<std::uint8_t>> pattern,
                                MotifPlacement placement) {
    const auto pr = static_cast<NodeId>(pattern.size());
    const auto pc = static_cast<NodeId>(pattern.empty() ? 0 : pattern.front().size());
    if (pr == 0 || pc == 0) throw std::invalid_argument("empty coupling pattern");
    if (pr > n_hw || pc > n_sw) {
        throw std::invalid_argument("coupling section cannot hold a " + std::to_string(pr) + "x" +
                                    std::to_string(pc) + " pattern");
    }
    CouplingMatrix m(n_hw, n_sw);
    const NodeId tiles =
        placement == MotifPlacement::TileDiagonal ? std::min(n_hw / pr, n_sw / pc) : 1;
    for (NodeId t = 0; t < tiles; ++t) {
        for (NodeId i = 0; i < pr; ++i) {
            for (NodeId j = 0; j < pc; ++j) {
                if (pattern[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    m.set(t * pr + i, t * pc + j, true);
                }
            }
        }
    }
    return m;
}

CouplingMatrix apply_permutation(const CouplingMatrix& m, std::span<const NodeId> row_perm,
                                 std::span<const NodeId> col_perm) {
    auto check = [](std::span<const NodeId> perm, NodeId n, const char* which) {
        if (static_cast<NodeId>(perm.size()) != n) {
            throw std::invalid_argument(std::string(which) + " permutation has wrong length");
        }
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
        for (NodeId p : perm) {
            if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
                throw std::invalid_argument(std::string(which) + " permutation is not a permutation");
            }
            seen[static_cast<std::size_t>(p)] = 1;
        }
    };
    check(row_perm, m.rows, "row");
    check(col_perm, m.cols, "column");
    CouplingMatrix out(m.rows, m.cols);
    for (NodeId i = 0; i < m.rows; ++i) {
        for (NodeId j = 0; j < m.cols; ++j) {
            out.set(i, j, m.at(row_perm[static_cast<std::size_t>(i)],
                               col_perm[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

}  // namespace hsnet
