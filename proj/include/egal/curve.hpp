/*
 * Egalitarian-curve sampling: evaluate a capital -> ROI function over a
 * capital grid, optionally across threads, into a deterministically
 * ordered curve.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_CURVE_HPP
#define EGAL_CURVE_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "egal/catalog.hpp"

namespace egal {

/// Evenly spaced capitals, all strictly positive.
struct CapitalGrid {
    double min_capital = 100.0;
    double max_capital = 10000.0;
    double step = 10.0;

    void validate() const {
        if (!(min_capital > 0.0)) throw std::invalid_argument("grid minimum must be positive");
        if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
        if (max_capital < min_capital) throw std::invalid_argument("grid maximum below minimum");
    }

    std::size_t size() const {
        validate();
        return static_cast<std::size_t>(std::floor((max_capital - min_capital) / step)) + 1;
    }

    double at(std::size_t i) const {
        return min_capital + static_cast<double>(i) * step;
    }
};

struct CurvePoint {
    double capital = 0.0;
    double roi = 0.0;

    bool operator==(const CurvePoint&) const = default;
};

/// Sampled egalitarian curve. Capitals are strictly increasing; metadata
/// carries the full parameter snapshot the curve was computed under.
struct Curve {
    std::vector<CurvePoint> points;
    std::map<std::string, std::string> metadata;
};

/// Evaluate `roi_of` at every grid capital. With threads > 1 the grid is
/// partitioned across workers; each point lands in its own slot so the
/// result is identical to the serial one. Evaluators must be pure. An
/// evaluator failure is rethrown with the offending capital attached.
template <typename Evaluator>
Curve egalitarian_curve(Evaluator&& roi_of, const CapitalGrid& grid, unsigned threads = 1) {
    grid.validate();
    const std::size_t n = grid.size();
    Curve curve;
    curve.points.assign(n, CurvePoint{});

    std::string first_error;
    std::size_t first_error_index = n;

    auto run = [&](std::size_t begin, std::size_t end, std::string& error, std::size_t& error_index) {
        for (std::size_t i = begin; i < end; ++i) {
            const double v = grid.at(i);
            try {
                curve.points[i] = CurvePoint{v, roi_of(v)};
            } catch (const std::exception& ex) {
                error = "evaluator failed at capital " + detail::format_number(v) + ": " + ex.what();
                error_index = i;
                return;
            }
        }
    };

    if (threads <= 1 || n < 2) {
        run(0, n, first_error, first_error_index);
    } else {
        const unsigned nworkers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
        std::vector<std::string> errors(nworkers);
        std::vector<std::size_t> error_idx(nworkers, n);
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        const std::size_t chunk = (n + nworkers - 1) / nworkers;
        for (unsigned w = 0; w < nworkers; ++w) {
            const std::size_t begin = std::min(n, static_cast<std::size_t>(w) * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back(run, begin, end, std::ref(errors[w]), std::ref(error_idx[w]));
        }
        for (auto& t : pool) t.join();
        for (unsigned w = 0; w < nworkers; ++w) {
            if (error_idx[w] < first_error_index) {
                first_error_index = error_idx[w];
                first_error = errors[w];
            }
        }
    }

    if (first_error_index < n) throw std::runtime_error(first_error);
    return curve;
}

} // namespace egal

#endif // EGAL_CURVE_HPP
