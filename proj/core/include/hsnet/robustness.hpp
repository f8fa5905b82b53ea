#pragma once

#include <span>
#include <vector>

#include "hsnet/attack.hpp"

namespace hsnet {

/// The robustness coefficient compares the area under the largest-component
/// trajectory with the ideal linear-degradation triangle of area N^2/2 and
/// reports the ratio as a percentage. A complete graph scores exactly 100
/// under any removal order.
struct RobustnessResult {
    double r_percent = 0.0;
    double area_actual = 0.0;  ///< trapezium accumulation of the trajectory
    double area_ideal = 0.0;   ///< N^2 / 2
    NodeId n = 0;
};

/// R = (200 * sum(S_k) - 100 * S_0) / N^2, accumulated in exact integer
/// arithmetic with a single final division. Throws std::invalid_argument on
/// malformed traces (inconsistent lengths, S_N != 0, negative sizes).
RobustnessResult robustness_coefficient(const AttackTrace& trace);

/// Same computation from a bare trajectory S_0..S_N.
RobustnessResult robustness_from_series(std::span<const NodeId> s_series);

struct RobustnessAggregate {
    double mean = 0.0;
    double stddev = 0.0;  ///< sample standard deviation; 0 for a single run
    std::vector<double> per_run;
};

/// Aggregates R over repeated runs. All traces must come from graphs of the
/// same size and use the same strategy kind.
RobustnessAggregate mean_robustness(std::span<const AttackTrace> traces);

}  // namespace hsnet
