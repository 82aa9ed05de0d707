// SPDX-License-Identifier: Apache-2.0
//
// wpcnsim - uplink throughput of a wireless powered network under TDD / FDD
// Copyright 2026 the wpcnsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#ifndef WPCN_OPTIMIZER_HPP
#define WPCN_OPTIMIZER_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpcn {

/// Default bracket tolerance on x for the golden-section maximizer.
inline constexpr double default_tol = 1e-9;

/// Result of a one-dimensional maximization.
struct MaximizerResult {
    double x_star = 0.0;            ///< location of the maximum
    double f_star = 0.0;            ///< objective re-evaluated at x_star
    std::uint64_t iterations = 0;   ///< number of objective evaluations
    bool converged = false;         ///< bracket width reached tol in budget
};

namespace detail {

template <typename F>
double checked_eval(F& f, double x) {
    const double fx = f(x);
    if (!std::isfinite(fx))
        throw std::runtime_error("objective evaluated to a non-finite value at x = " +
                                 std::to_string(x));
    return fx;
}

}  // namespace detail

/// Maximizes a concave function on [x_lo, x_hi] by derivative-free
/// golden-section search.
///
/// The bracket is contracted until its width is at most tol, subject to a
/// fixed iteration budget derived from tol (so a tol below the local
/// floating-point resolution cannot hang the search; `converged` reports
/// whether the width target was met). The returned maximizer is the best of
/// {x_lo, bracket midpoint, x_hi}; ties resolve toward the smallest x, so a
/// flat objective yields x_lo and an optimum at a constraint boundary is
/// reported at the exact boundary value. f_star is re-evaluated at x_star,
/// making `result.f_star == f(result.x_star)` hold bit-for-bit.
///
/// Throws std::invalid_argument for a malformed interval or non-positive
/// tol, std::runtime_error if the objective produces a non-finite value.
template <typename F>
MaximizerResult maximize_concave(F&& f, double x_lo, double x_hi, double tol = default_tol) {
    if (!(std::isfinite(x_lo) && std::isfinite(x_hi)) || x_lo > x_hi)
        throw std::invalid_argument("maximize_concave: require finite x_lo <= x_hi");
    if (!(std::isfinite(tol) && tol > 0.0))
        throw std::invalid_argument("maximize_concave: tol must be finite and > 0");

    MaximizerResult res;
    if (x_lo == x_hi) {
        res.x_star = x_lo;
        res.f_star = detail::checked_eval(f, x_lo);
        res.iterations = 1;
        res.converged = true;
        return res;
    }

    constexpr double invphi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    const double span = x_hi - x_lo;
    const int budget =
        span <= tol ? 0
                    : static_cast<int>(std::ceil(std::log(span / tol) / -std::log(invphi))) + 2;

    double a = x_lo, b = x_hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = detail::checked_eval(f, c);
    double fd = detail::checked_eval(f, d);
    std::uint64_t evals = 2;

    for (int step = 0; b - a > tol && step < budget; ++step) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = detail::checked_eval(f, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = detail::checked_eval(f, d);
        }
        ++evals;
    }
    res.converged = (b - a) <= tol;

    // Candidates: original endpoints and the converged bracket midpoint.
    // Strict improvement required, so ties go to the smallest x.
    double best_x = x_lo;
    double best_f = detail::checked_eval(f, x_lo);
    const double mid = 0.5 * (a + b);
    const double fm = detail::checked_eval(f, mid);
    if (fm > best_f) {
        best_x = mid;
        best_f = fm;
    }
    const double fhi = detail::checked_eval(f, x_hi);
    if (fhi > best_f) {
        best_x = x_hi;
        best_f = fhi;
    }
    evals += 3;

    res.x_star = best_x;
    res.f_star = best_f;
    res.iterations = evals;
    return res;
}

/// Exhaustive reference maximizer over a uniform n-point grid including both
/// endpoints. Intended as an independent cross-check for maximize_concave,
/// not for production use. Ties keep the smallest x. Throws
/// std::invalid_argument for a malformed interval or n_points < 2,
/// std::runtime_error on a non-finite objective value.
template <typename F>
MaximizerResult grid_oracle(F&& f, double x_lo, double x_hi, std::uint64_t n_points) {
    if (!(std::isfinite(x_lo) && std::isfinite(x_hi)) || x_lo > x_hi)
        throw std::invalid_argument("grid_oracle: require finite x_lo <= x_hi");
    if (n_points < 2) throw std::invalid_argument("grid_oracle: need at least two grid points");

    const double step = (x_hi - x_lo) / static_cast<double>(n_points - 1);
    double best_x = x_lo;
    double best_f = detail::checked_eval(f, x_lo);
    for (std::uint64_t i = 1; i < n_points; ++i) {
        const double x = (i == n_points - 1) ? x_hi : x_lo + step * static_cast<double>(i);
        const double fx = detail::checked_eval(f, x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    return MaximizerResult{best_x, best_f, n_points, true};
}

}  // namespace wpcn

#endif  // WPCN_OPTIMIZER_HPP
