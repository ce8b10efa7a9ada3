/*
 * Unbounded-knapsack allocation of mining hardware under a capital budget.
 *
 * Prices are quantized to ceil(price/granularity) budget units and the
 * dynamic program maximizes fresh proceeds (units held * period income)
 * subject to spent <= capital. One table answers every capital up to the
 * bound it was built for, so curve sampling costs one pass.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_ALLOCATE_HPP
#define EGAL_ALLOCATE_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egal/catalog.hpp"
#include "egal/mining.hpp"

namespace egal {

/// A multiset of purchased machines and its expected fresh proceeds.
/// `counts` holds only machines actually bought (all with positive income
/// rate); `spent` never exceeds the capital it was computed for.
struct Allocation {
    std::map<std::string, long long> counts;
    double spent = 0.0;
    double proceeds = 0.0;
};

class KnapsackPlanner {
public:
    KnapsackPlanner(std::vector<Machine> machines, CoinParams coin, EconParams econ,
                    double max_capital, double granularity = 1.0)
        : machines_(std::move(machines)), coin_(std::move(coin)), econ_(econ),
          granularity_(granularity), max_capital_(max_capital) {
        if (granularity_ <= 0.0) throw std::invalid_argument("granularity must be positive");
        if (max_capital_ < 0.0) throw std::invalid_argument("capital must be nonnegative");

        values_.reserve(machines_.size());
        for (const auto& m : machines_)
            values_.push_back(econ_.duration_hours * income_rate(m, coin_, econ_).usd_per_hour);
        for (std::size_t i = 0; i < machines_.size(); ++i) {
            if (values_[i] <= 0.0) continue;  // never buy a machine that cannot earn
            Item it;
            it.machine = i;
            it.price_units = static_cast<std::int64_t>(std::ceil(machines_[i].price / granularity_));
            it.value = values_[i];
            items_.push_back(it);
        }

        const std::int64_t budget = units_for(max_capital_);
        value_.assign(static_cast<std::size_t>(budget) + 1, 0.0);
        count_.assign(static_cast<std::size_t>(budget) + 1, 0);
        spent_units_.assign(static_cast<std::size_t>(budget) + 1, 0);
        choice_.assign(static_cast<std::size_t>(budget) + 1, kCarry);
        for (std::int64_t w = 1; w <= budget; ++w) {
            // carry: spending nothing extra is always feasible
            value_[w] = value_[w - 1];
            count_[w] = count_[w - 1];
            spent_units_[w] = spent_units_[w - 1];
            choice_[w] = kCarry;
            for (std::size_t k = 0; k < items_.size(); ++k) {
                const Item& it = items_[k];
                if (it.price_units > w) continue;
                const std::int64_t from = w - it.price_units;
                const double cand_value = value_[from] + it.value;
                const std::int32_t cand_count = count_[from] + 1;
                const std::int64_t cand_spent = spent_units_[from] + it.price_units;
                // ties resolved toward fewer machines, then lower spend
                if (cand_value > value_[w] ||
                    (cand_value == value_[w] &&
                     (cand_count < count_[w] ||
                      (cand_count == count_[w] && cand_spent < spent_units_[w])))) {
                    value_[w] = cand_value;
                    count_[w] = cand_count;
                    spent_units_[w] = cand_spent;
                    choice_[w] = static_cast<std::int32_t>(k);
                }
            }
        }
    }

    /// Best fresh proceeds achievable with `capital`, recomputed from the
    /// reconstructed counts so the figure is independent of the DP's
    /// internal accumulation order.
    double proceeds_at(double capital) const { return evaluate(counts_at(capital)).second; }

    Allocation allocation_at(double capital) const {
        std::vector<long long> counts = counts_at(capital);
        auto [spent, proceeds] = evaluate(counts);
        Allocation a;
        a.spent = spent;
        a.proceeds = proceeds;
        for (std::size_t i = 0; i < machines_.size(); ++i)
            if (counts[i] > 0) a.counts.emplace(machines_[i].name, counts[i]);
        return a;
    }

    double granularity() const { return granularity_; }
    double max_capital() const { return max_capital_; }
    const std::vector<Machine>& machines() const { return machines_; }

private:
    static constexpr std::int32_t kCarry = -1;

    struct Item {
        std::size_t machine = 0;
        std::int64_t price_units = 0;
        double value = 0.0;
    };

    std::int64_t units_for(double capital) const {
        return static_cast<std::int64_t>(std::floor(capital / granularity_));
    }

    std::vector<long long> counts_at(double capital) const {
        if (capital < 0.0) throw std::invalid_argument("capital must be nonnegative");
        if (capital > max_capital_)
            throw std::invalid_argument("capital exceeds the bound this planner was built for");
        std::vector<long long> counts(machines_.size(), 0);
        std::int64_t w = units_for(capital);
        while (w > 0) {
            const std::int32_t c = choice_[static_cast<std::size_t>(w)];
            if (c == kCarry) {
                --w;
            } else {
                counts[items_[static_cast<std::size_t>(c)].machine] += 1;
                w -= items_[static_cast<std::size_t>(c)].price_units;
            }
        }
        return counts;
    }

    // (spent, proceeds) summed in machine order
    std::pair<double, double> evaluate(const std::vector<long long>& counts) const {
        double spent = 0.0, proceeds = 0.0;
        for (std::size_t i = 0; i < machines_.size(); ++i) {
            spent += static_cast<double>(counts[i]) * machines_[i].price;
            proceeds += static_cast<double>(counts[i]) * values_[i];
        }
        return {spent, proceeds};
    }

    std::vector<Machine> machines_;
    CoinParams coin_;
    EconParams econ_;
    double granularity_;
    double max_capital_;
    std::vector<double> values_;  // period income per machine, catalog order
    std::vector<Item> items_;
    std::vector<double> value_;
    std::vector<std::int32_t> count_;
    std::vector<std::int64_t> spent_units_;
    std::vector<std::int32_t> choice_;
};

/// Proceeds-maximizing machine multiset with spent <= capital.
inline Allocation knapsack_allocate(double capital, const std::vector<Machine>& ms,
                                    const CoinParams& c, const EconParams& e,
                                    double granularity = 1.0) {
    if (capital < 0.0) throw std::invalid_argument("capital must be nonnegative");
    KnapsackPlanner planner(ms, c, e, capital, granularity);
    return planner.allocation_at(capital);
}

/// Fresh proceeds of the optimal allocation divided by capital.
inline double optimal_roi(double capital, const std::vector<Machine>& ms, const CoinParams& c,
                          const EconParams& e, double granularity = 1.0) {
    if (capital <= 0.0) throw std::invalid_argument("capital must be positive");
    return knapsack_allocate(capital, ms, c, e, granularity).proceeds / capital;
}

/// Capital -> ROI evaluator backed by one shared DP table built up to
/// `max_capital`. Read-only after construction, safe for concurrent calls.
class PowRoiEvaluator {
public:
    PowRoiEvaluator(std::vector<Machine> ms, CoinParams c, EconParams e, double max_capital,
                    double granularity = 1.0)
        : planner_(std::make_shared<const KnapsackPlanner>(std::move(ms), std::move(c), e,
                                                           max_capital, granularity)) {}

    double operator()(double capital) const {
        if (capital <= 0.0) throw std::invalid_argument("capital must be positive");
        return planner_->proceeds_at(capital) / capital;
    }

    const KnapsackPlanner& planner() const { return *planner_; }

private:
    std::shared_ptr<const KnapsackPlanner> planner_;
};

} // namespace egal

#endif // EGAL_ALLOCATE_HPP
