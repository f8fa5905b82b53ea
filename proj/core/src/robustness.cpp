#include "hsnet/robustness.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hsnet {

RobustnessResult robustness_from_series(std::span<const NodeId> s_series) {
    if (s_series.size() < 2) {
        throw std::invalid_argument("trajectory needs at least S_0 and S_N");
    }
    if (s_series.back() != 0) {
        throw std::invalid_argument("trajectory must end at S_N = 0");
    }
    std::int64_t sum = 0;
    for (NodeId s : s_series) {
        if (s < 0) throw std::invalid_argument("component sizes cannot be negative");
        sum += s;
    }
    const auto n = static_cast<std::int64_t>(s_series.size() - 1);
    const std::int64_t s0 = s_series.front();

    RobustnessResult r;
    r.n = static_cast<NodeId>(n);
    r.area_actual = static_cast<double>(sum) - 0.5 * static_cast<double>(s0);
    r.area_ideal = 0.5 * static_cast<double>(n) * static_cast<double>(n);
    r.r_percent = static_cast<double>(200 * sum - 100 * s0) / (static_cast<double>(n) * static_cast<double>(n));
    return r;
}

RobustnessResult robustness_coefficient(const AttackTrace& trace) {
    if (trace.s_series.size() != trace.removed.size() + 1) {
        throw std::invalid_argument("trace lengths are inconsistent");
    }
    return robustness_from_series(trace.s_series);
}

RobustnessAggregate mean_robustness(std::span<const AttackTrace> traces) {
    if (traces.empty()) throw std::invalid_argument("no traces to aggregate");
    const auto n = traces.front().removed.size();
    const auto kind = traces.front().strategy.kind;
    RobustnessAggregate agg;
    agg.per_run.reserve(traces.size());
    for (const auto& t : traces) {
        if (t.removed.size() != n) {
            throw std::invalid_argument("cannot aggregate traces of different network sizes");
        }
        if (t.strategy.kind != kind) {
            throw std::invalid_argument("cannot aggregate traces of different strategies");
        }
        agg.per_run.push_back(robustness_coefficient(t).r_percent);
    }
    double sum = 0.0;
    for (double r : agg.per_run) sum += r;
    agg.mean = sum / static_cast<double>(agg.per_run.size());
    if (agg.per_run.size() > 1) {
        double ss = 0.0;
        for (double r : agg.per_run) ss += (r - agg.mean) * (r - agg.mean);
        agg.stddev = std::sqrt(ss / static_cast<double>(agg.per_run.size() - 1));
    }
    return agg;
}

}  // namespace hsnet
