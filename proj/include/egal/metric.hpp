/*
 * The egalitarianism metric (negative population variance of curve ROI)
 * and the capital-splitting consistency check.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_METRIC_HPP
#define EGAL_METRIC_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "egal/curve.hpp"

namespace egal {

/// value = -(population variance of sampled ROI); 0 is perfect, more
/// negative is less egalitarian.
struct EgalScore {
    double value = 0.0;
    double mean_roi = 0.0;
    std::size_t sample_count = 0;
};

/// Population variance over the grid samples, negated. The samples are
/// shifted by the first ROI before the two-pass variance so a constant
/// curve scores exactly zero: every shifted sample is exactly 0.0 and no
/// rounding can leak in.
inline EgalScore egalitarianism(const Curve& curve) {
    if (curve.points.empty()) throw std::invalid_argument("curve is empty");
    const std::size_t n = curve.points.size();
    const double origin = curve.points.front().roi;

    double shifted_sum = 0.0;
    for (const auto& p : curve.points) shifted_sum += p.roi - origin;
    const double shifted_mean = shifted_sum / static_cast<double>(n);

    double sq = 0.0;
    for (const auto& p : curve.points) {
        const double d = (p.roi - origin) - shifted_mean;
        sq += d * d;
    }

    EgalScore score;
    score.value = -(sq / static_cast<double>(n));
    score.mean_roi = origin + shifted_mean;
    score.sample_count = n;
    return score;
}

struct SybilViolation {
    double capital = 0.0;
    long multiple = 0;
    double roi_base = 0.0;
    double roi_multiplied = 0.0;
};

struct SybilReport {
    std::vector<SybilViolation> violations;
    std::size_t checked = 0;

    bool ok() const { return violations.empty(); }
};

/// Splitting capital must never beat pooling it: for every grid capital v
/// and multiple i, require roi(v) <= roi(i*v) + tolerance. Returns every
/// (v, i) that fails.
template <typename Evaluator>
SybilReport sybil_check(Evaluator&& roi_of, const CapitalGrid& grid,
                        const std::vector<long>& multiples, double tolerance = 0.0) {
    grid.validate();
    if (tolerance < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
    SybilReport report;
    const std::size_t n = grid.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double v = grid.at(j);
        const double base = roi_of(v);
        for (long i : multiples) {
            if (i < 1) continue;
            const double multiplied = roi_of(static_cast<double>(i) * v);
            ++report.checked;
            if (base > multiplied + tolerance)
                report.violations.push_back(SybilViolation{v, i, base, multiplied});
        }
    }
    return report;
}

} // namespace egal

#endif // EGAL_METRIC_HPP
