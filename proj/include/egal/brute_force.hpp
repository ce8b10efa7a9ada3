/*
 * Exhaustive-enumeration allocator. Independent check for the knapsack DP:
 * walks every feasible count vector, no shared code with the DP path.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_BRUTE_FORCE_HPP
#define EGAL_BRUTE_FORCE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "egal/allocate.hpp"
#include "egal/catalog.hpp"
#include "egal/mining.hpp"

namespace egal {

namespace detail {

struct BruteState {
    const std::vector<Machine>* machines;
    const std::vector<double>* values;
    double capital;
    std::vector<long long> current;
    bool found = false;
    std::vector<long long> best;
    double best_proceeds = 0.0;
    double best_spent = 0.0;
};

// Counts ascend per level, machines left to right, so the first vector seen
// at any (proceeds, spent) tie is the lexicographically smallest.
inline void brute_recurse(BruteState& st, std::size_t i, double spent, double proceeds) {
    if (i == st.machines->size()) {
        if (!st.found || proceeds > st.best_proceeds ||
            (proceeds == st.best_proceeds && spent < st.best_spent)) {
            st.found = true;
            st.best = st.current;
            st.best_proceeds = proceeds;
            st.best_spent = spent;
        }
        return;
    }
    const double price = (*st.machines)[i].price;
    const double value = (*st.values)[i];
    const long long max_n = static_cast<long long>(std::floor((st.capital - spent) / price));
    for (long long n = 0; n <= max_n; ++n) {
        st.current[i] = n;
        brute_recurse(st, i + 1, spent + static_cast<double>(n) * price,
                      proceeds + static_cast<double>(n) * value);
    }
    st.current[i] = 0;
}

} // namespace detail

/// Enumerates all count vectors with spent <= capital and returns the
/// proceeds-maximizing one; ties broken by lower spent, then lexicographic
/// counts. Guarded: the full enumeration box must stay within 1e7 vectors.
inline Allocation brute_force_allocate(double capital, const std::vector<Machine>& ms,
                                       const CoinParams& c, const EconParams& e) {
    if (capital < 0.0) throw std::invalid_argument("capital must be nonnegative");

    double box = 1.0;
    for (const auto& m : ms) box *= std::floor(capital / m.price) + 1.0;
    if (box > 1e7) throw std::runtime_error("instance too large for oracle");

    std::vector<double> values;
    values.reserve(ms.size());
    for (const auto& m : ms)
        values.push_back(e.duration_hours * income_rate(m, c, e).usd_per_hour);

    detail::BruteState st;
    st.machines = &ms;
    st.values = &values;
    st.capital = capital;
    st.current.assign(ms.size(), 0);
    detail::brute_recurse(st, 0, 0.0, 0.0);

    Allocation a;
    a.spent = st.best_spent;
    a.proceeds = st.best_proceeds;
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (st.best[i] > 0) a.counts.emplace(ms[i].name, st.best[i]);
    return a;
}

} // namespace egal

#endif // EGAL_BRUTE_FORCE_HPP
