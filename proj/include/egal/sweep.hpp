/*
 * Parameter sweeps: egalitarian curves for one coin while one economic or
 * market parameter varies.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_SWEEP_HPP
#define EGAL_SWEEP_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egal/allocate.hpp"
#include "egal/curve.hpp"

namespace egal {

enum class SweepAxis { electricity_cost, duration, token_price, total_hash_rate };

inline std::string_view axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::electricity_cost: return "electricity_cost";
        case SweepAxis::duration: return "duration";
        case SweepAxis::token_price: return "token_price";
        case SweepAxis::total_hash_rate: return "total_hash_rate";
    }
    throw std::invalid_argument("unknown sweep axis");
}

inline SweepAxis axis_from_name(std::string_view name) {
    if (name == "electricity_cost") return SweepAxis::electricity_cost;
    if (name == "duration") return SweepAxis::duration;
    if (name == "token_price") return SweepAxis::token_price;
    if (name == "total_hash_rate") return SweepAxis::total_hash_rate;
    throw std::invalid_argument(
        "invalid sweep axis \"" + std::string(name) +
        "\"; valid: electricity_cost, duration, token_price, total_hash_rate");
}

/// Everything a proof-of-work curve run depends on.
struct PowScenario {
    std::vector<Machine> machines;
    CoinParams coin;
    EconParams econ;
    double granularity = 1.0;
};

namespace detail {

inline void apply_axis(PowScenario& s, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::electricity_cost:
            if (value < 0.0) throw std::invalid_argument("electricity_cost value must be nonnegative");
            s.econ.electricity_cost = value;
            return;
        case SweepAxis::duration:
            if (!(value > 0.0)) throw std::invalid_argument("duration value must be positive");
            s.econ.duration_hours = value;
            return;
        case SweepAxis::token_price:
            if (!(value > 0.0)) throw std::invalid_argument("token_price value must be positive");
            s.coin.token_price = value;
            return;
        case SweepAxis::total_hash_rate:
            if (!(value > 0.0)) throw std::invalid_argument("total_hash_rate value must be positive");
            s.coin.total_hash_rate = value;
            return;
    }
    throw std::invalid_argument("unknown sweep axis");
}

inline void stamp_pow_metadata(Curve& c, const PowScenario& s, const CapitalGrid& grid) {
    c.metadata["model"] = "pow";
    c.metadata["coin"] = s.coin.coin;
    c.metadata["duration_hours"] = format_number(s.econ.duration_hours);
    c.metadata["electricity_cost_usd_per_kwh"] = format_number(s.econ.electricity_cost);
    c.metadata["granularity_usd"] = format_number(s.granularity);
    c.metadata["min_capital_usd"] = format_number(grid.min_capital);
    c.metadata["max_capital_usd"] = format_number(grid.max_capital);
    c.metadata["step_usd"] = format_number(grid.step);
}

} // namespace detail

/// One curve per swept value; all other parameters stay at `base`. Each
/// curve's metadata records the swept axis and value.
inline std::vector<Curve> parameter_sweep(const PowScenario& base, SweepAxis axis,
                                          const std::vector<double>& values,
                                          const CapitalGrid& grid, unsigned threads = 1) {
    grid.validate();
    std::vector<Curve> curves;
    curves.reserve(values.size());
    for (double value : values) {
        PowScenario s = base;
        detail::apply_axis(s, axis, value);
        PowRoiEvaluator roi(s.machines, s.coin, s.econ, grid.max_capital, s.granularity);
        Curve c = egalitarian_curve(roi, grid, threads);
        detail::stamp_pow_metadata(c, s, grid);
        c.metadata["swept_axis"] = std::string(axis_name(axis));
        c.metadata["swept_value"] = detail::format_number(value);
        curves.push_back(std::move(c));
    }
    return curves;
}

} // namespace egal

#endif // EGAL_SWEEP_HPP
