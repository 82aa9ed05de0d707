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

#include "wpcn/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "wpcn/model.hpp"

namespace {

auto objective(double gamma, double w0) {
    return [obj = wpcn::ObjectiveSpec{gamma, w0, 0.0, 1.0}](double x) {
        return wpcn::throughput(obj, x);
    };
}

}  // namespace

TEST_CASE("closed-form maximum at gamma = 1") {
    // -(1-x) log2(1-x) peaks at x = 1 - 1/e with value log2(e)/e.
    const auto result = wpcn::maximize_concave(objective(1.0, 1.0), 0.0, 1.0, 1e-9);
    CHECK(result.converged);
    CHECK(std::abs(result.x_star - (1.0 - 1.0 / std::numbers::e)) < 5e-8);
    CHECK(result.f_star ==
          doctest::Approx(std::numbers::log2e / std::numbers::e).epsilon(1e-12));
}

TEST_CASE("frozen optima for the throughput objective") {
    // Frozen against a 50-digit golden-section run and 1e8-point grids.
    const auto at100 = wpcn::maximize_concave(objective(100.0, 1e4), 0.0, 1.0, 1e-9);
    CHECK(at100.converged);
    CHECK(std::abs(at100.x_star - 0.26826728727619299) < 5e-8);
    CHECK(at100.f_star == doctest::Approx(38306.461998544781).epsilon(1e-12));

    const auto at10 = wpcn::maximize_concave(objective(10.0, 1e4), 0.0, 1.0, 1e-9);
    CHECK(std::abs(at10.x_star - 0.41773683082480165) < 5e-8);
    CHECK(at10.f_star == doctest::Approx(17649.01737972637).epsilon(1e-12));

    const auto at1000 = wpcn::maximize_concave(objective(1000.0, 1e4), 0.0, 1.0, 1e-9);
    CHECK(std::abs(at1000.x_star - 0.18366843997340306) < 5e-8);
    CHECK(at1000.f_star == doctest::Approx(63838.195618119821).epsilon(1e-12));
}

TEST_CASE("iteration budget is bounded and counts evaluations") {
    const auto result = wpcn::maximize_concave(objective(100.0, 1e4), 0.0, 1.0, 1e-9);
    CHECK(result.converged);
    CHECK(result.iterations >= 45);  // ~45 contractions to shrink 1 -> 1e-9
    CHECK(result.iterations <= 60);

    const auto coarse = wpcn::maximize_concave(objective(100.0, 1e4), 0.0, 1.0, 1e-3);
    CHECK(coarse.converged);
    CHECK(coarse.iterations < result.iterations);
    CHECK(std::abs(coarse.x_star - result.x_star) < 1e-3);
}

TEST_CASE("boundary optima land exactly on the boundary") {
    // Restricted interval cutting off the unconstrained maximizer at 0.1.
    const auto capped = wpcn::maximize_concave(objective(1000.0, 1e4), 0.0, 0.1, 1e-9);
    CHECK(capped.x_star == 0.1);
    const wpcn::ObjectiveSpec obj{1000.0, 1e4, 0.0, 0.1};
    CHECK(capped.f_star == wpcn::throughput(obj, 0.1));

    // Monotone increasing on [0, 1].
    const auto rising = wpcn::maximize_concave([](double x) { return x; }, 0.0, 1.0, 1e-9);
    CHECK(rising.x_star == 1.0);
    CHECK(rising.f_star == 1.0);

    // Monotone decreasing on [0, 1].
    const auto falling = wpcn::maximize_concave([](double x) { return 1.0 - x; }, 0.0, 1.0, 1e-9);
    CHECK(falling.x_star == 0.0);
    CHECK(falling.f_star == 1.0);
}

TEST_CASE("flat objective resolves to the lower endpoint") {
    const auto flat = wpcn::maximize_concave([](double) { return 42.0; }, 0.25, 0.75, 1e-9);
    CHECK(flat.x_star == 0.25);
    CHECK(flat.f_star == 42.0);

    const auto dead = wpcn::maximize_concave(objective(0.0, 1e4), 0.0, 1.0, 1e-9);
    CHECK(dead.x_star == 0.0);
    CHECK(dead.f_star == 0.0);
}

TEST_CASE("degenerate and invalid inputs") {
    const auto point = wpcn::maximize_concave(objective(5.0, 1e4), 0.3, 0.3, 1e-9);
    CHECK(point.x_star == 0.3);
    CHECK(point.iterations == 1);
    CHECK(point.converged);

    CHECK_THROWS_AS(wpcn::maximize_concave(objective(5.0, 1e4), 0.7, 0.3, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(wpcn::maximize_concave(objective(5.0, 1e4), 0.0, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(wpcn::maximize_concave(objective(5.0, 1e4), 0.0, 1.0, -1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        wpcn::maximize_concave([](double) { return std::nan(""); }, 0.0, 1.0, 1e-9),
        std::runtime_error);

    CHECK_THROWS_AS(wpcn::grid_oracle(objective(5.0, 1e4), 0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(wpcn::grid_oracle(objective(5.0, 1e4), 0.5, 0.2, 100), std::invalid_argument);
}

TEST_CASE("grid oracle hits endpoints and frozen optimum") {
    const auto grid = wpcn::grid_oracle(objective(10.0, 1e4), 0.0, 1.0, 10000001);
    CHECK(grid.iterations == 10000001);
    // With 1e7 intervals the grid maximizer is within one step of the truth.
    CHECK(std::abs(grid.x_star - 0.41773683082480165) < 2e-7);
    CHECK(grid.f_star == doctest::Approx(17649.01737972637).epsilon(1e-12));

    // A two-point grid degenerates to comparing the endpoints.
    const auto two = wpcn::grid_oracle([](double x) { return x; }, 0.25, 0.75, 2);
    CHECK(two.x_star == 0.75);
    const auto two_flat = wpcn::grid_oracle([](double) { return 1.0; }, 0.25, 0.75, 2);
    CHECK(two_flat.x_star == 0.25);  // ties keep the smallest x
}

TEST_CASE("golden section agrees with the grid oracle across the SNR range") {
    std::mt19937_64 rng(20260824ull);
    std::uniform_real_distribution<double> log_gamma(std::log(1e-3), std::log(1e6));
    std::uniform_real_distribution<double> log_w0(std::log(1e3), std::log(1e7));
    constexpr std::uint64_t n_grid = 1000001;
    for (int draw = 0; draw < 25; ++draw) {
        const double gamma = std::exp(log_gamma(rng));
        const double w0 = std::exp(log_w0(rng));
        const auto gold = wpcn::maximize_concave(objective(gamma, w0), 0.0, 1.0, 1e-9);
        const auto grid = wpcn::grid_oracle(objective(gamma, w0), 0.0, 1.0, n_grid);
        CHECK(std::abs(gold.x_star - grid.x_star) <=
              2.0 / static_cast<double>(n_grid - 1) + 1e-9);
        CHECK(gold.f_star >= grid.f_star * (1.0 - 1e-9));
        CHECK(std::abs(gold.f_star - grid.f_star) <= 1e-9 * grid.f_star + 1e-300);
    }
}
