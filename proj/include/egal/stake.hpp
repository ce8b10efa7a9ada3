/*
 * Proof-of-stake ROI evaluators: pure staking with a participation fee,
 * and ticket-quantized staking.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_STAKE_HPP
#define EGAL_STAKE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace egal {

struct StakeParams {
    double annual_return_rate = 0.05;  // fresh value per USD staked per period, >= 0
    double participation_fee = 0.0;    // USD deducted once before staking, >= 0
    double ticket_price = 1756.0;      // USD per ticket (ticket model only), > 0
};

namespace detail {
inline void check_stake(double capital, const StakeParams& p, bool ticket) {
    if (capital <= 0.0) throw std::invalid_argument("capital must be positive");
    if (p.annual_return_rate < 0.0) throw std::invalid_argument("return rate must be nonnegative");
    if (p.participation_fee < 0.0) throw std::invalid_argument("participation fee must be nonnegative");
    if (ticket && !(p.ticket_price > 0.0)) throw std::invalid_argument("ticket price must be positive");
}
} // namespace detail

/// Everything beyond the one-off participation fee is staked and earns the
/// return rate. The staked fraction is computed first so a zero fee yields
/// the rate bit-exactly at every capital.
inline double pure_stake_roi(double capital, const StakeParams& p) {
    detail::check_stake(capital, p, false);
    double staked = std::max(0.0, capital - p.participation_fee);
    return p.annual_return_rate * (staked / capital);
}

/// Stake is quantized to whole tickets; the remainder earns nothing.
inline double ticket_stake_roi(double capital, const StakeParams& p) {
    detail::check_stake(capital, p, true);
    double tickets = std::floor(capital / p.ticket_price);
    double staked = tickets * p.ticket_price;
    return p.annual_return_rate * (staked / capital);
}

} // namespace egal

#endif // EGAL_STAKE_HPP
