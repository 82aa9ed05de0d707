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

#include "wpcn/fading.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wpcn/duplex.hpp"

namespace wpcn {

namespace {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

void ChannelModel::validate() const {
    if (!(std::isfinite(mean_h) && mean_h >= 0.0))
        throw std::invalid_argument("mean_h must be finite and >= 0");
    if (!(std::isfinite(mean_g) && mean_g >= 0.0))
        throw std::invalid_argument("mean_g must be finite and >= 0");
}

BlockRng BlockRng::for_block(std::uint64_t seed, std::uint64_t block_index) {
    return BlockRng(mix(seed + golden_gamma * (block_index + 1)));
}

std::uint64_t BlockRng::next_u64() {
    state_ += golden_gamma;
    return mix(state_);
}

double BlockRng::next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double BlockRng::next_exponential(double mean) {
    if (!(std::isfinite(mean) && mean >= 0.0))
        throw std::domain_error("exponential mean must be finite and >= 0");
    if (mean == 0.0) return 0.0;
    return -mean * std::log(next_unit());
}

std::pair<double, double> draw_block(const ChannelModel& model, BlockRng& rng) {
    model.validate();
    if (model.kind == ChannelKind::deterministic) return {model.mean_h, model.mean_g};
    const double h = rng.next_exponential(model.mean_h);
    const double g = rng.next_exponential(model.mean_g);
    return {h, g};
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("quantile level must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    const double t = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(t);
    const double frac = t - static_cast<double>(lo);
    if (frac == 0.0 || lo + 1 == values.size()) return values[lo];
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

namespace {

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

RateQuantiles quantiles_of(const std::vector<double>& values) {
    return RateQuantiles{quantile(values, 0.05), quantile(values, 0.50), quantile(values, 0.95)};
}

}  // namespace

MonteCarloReport monte_carlo(const SystemParams& params, const ChannelModel& model,
                             std::uint64_t n_blocks, std::uint64_t seed, double tol) {
    params.validate();
    model.validate();
    if (n_blocks == 0) throw std::invalid_argument("n_blocks must be >= 1");

    std::vector<double> rates_tdd(n_blocks);
    std::vector<double> rates_fdd(n_blocks);
    SystemParams block_params = params;
    for (std::uint64_t i = 0; i < n_blocks; ++i) {
        BlockRng rng = BlockRng::for_block(seed, i);
        const auto [h, g] = draw_block(model, rng);
        block_params.h_gain = h;
        block_params.g_gain = g;
        rates_tdd[i] = solve_tdd(block_params, tol).rate;
        rates_fdd[i] = solve_fdd(block_params, tol).rate;
    }

    MonteCarloReport report;
    report.n_blocks = n_blocks;
    report.seed = seed;
    report.mean_rate_tdd = mean_of(rates_tdd);
    report.mean_rate_fdd = mean_of(rates_fdd);
    report.quantiles_tdd = quantiles_of(rates_tdd);
    report.quantiles_fdd = quantiles_of(rates_fdd);
    return report;
}

}  // namespace wpcn
