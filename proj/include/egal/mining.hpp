/*
 * Expected per-machine income rates and derived profitability figures.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_MINING_HPP
#define EGAL_MINING_HPP

#include <vector>

#include "egal/catalog.hpp"

namespace egal {

struct IncomeRate {
    const Machine* machine = nullptr;
    double usd_per_hour = 0.0;  // may be negative
};

/// Expected net income of one machine in USD per hour: the machine's share
/// of the network hash rate times the hourly block-reward value, minus its
/// electricity cost. Power is metered in watts and electricity in USD/kWh,
/// hence the /1000.
inline IncomeRate income_rate(const Machine& m, const CoinParams& c, const EconParams& e) {
    double revenue = 3600.0 * (m.hash_rate / c.total_hash_rate) * c.block_reward *
                     c.block_rate * c.token_price;
    double cost = (m.power / 1000.0) * e.electricity_cost;
    return IncomeRate{&m, revenue - cost};
}

/// Period income over purchase price. Negative when the machine loses money.
inline double machine_roi(const Machine& m, const CoinParams& c, const EconParams& e) {
    return e.duration_hours * income_rate(m, c, e).usd_per_hour / m.price;
}

/// Machines with strictly positive income rate, order preserved.
inline std::vector<Machine> profitable_machines(const std::vector<Machine>& ms,
                                                const CoinParams& c, const EconParams& e) {
    std::vector<Machine> out;
    for (const auto& m : ms)
        if (income_rate(m, c, e).usd_per_hour > 0.0) out.push_back(m);
    return out;
}

} // namespace egal

#endif // EGAL_MINING_HPP
