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

#ifndef WPCN_FADING_HPP
#define WPCN_FADING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "wpcn/model.hpp"
#include "wpcn/optimizer.hpp"

namespace wpcn {

/// Block-fading channel model. Under Rayleigh fading the power gains are
/// exponentially distributed, so `exponential` draws h and g from
/// independent exponentials with the given means; `deterministic` fixes
/// them at the means.
enum class ChannelKind { deterministic, exponential };

struct ChannelModel {
    ChannelKind kind = ChannelKind::deterministic;
    double mean_h = 0.0;  ///< mean downlink power gain
    double mean_g = 0.0;  ///< mean uplink power gain

    /// Throws std::invalid_argument unless both means are finite and >= 0.
    void validate() const;
};

/// splitmix64 stream (Steele/Lea/Flood). Each fading block owns a private
/// stream derived from (seed, block index), so results are reproducible and
/// independent of evaluation order, and no state is shared across blocks.
class BlockRng {
public:
    explicit BlockRng(std::uint64_t state) : state_(state) {}

    /// Stream for one block: the state is the (block_index + 1)-th output of
    /// a master splitmix64 sequence seeded with `seed`, which places the
    /// streams of distinct blocks pseudorandomly far apart.
    static BlockRng for_block(std::uint64_t seed, std::uint64_t block_index);

    std::uint64_t next_u64();

    /// Uniform draw on (0, 1] with 53-bit resolution; never returns 0, so
    /// log(u) stays finite.
    double next_unit();

    /// Exponential draw by inverse CDF, -mean * log(u). A zero mean
    /// degenerates to exactly 0. Rejects negative or non-finite means.
    double next_exponential(double mean);

private:
    std::uint64_t state_;
};

/// Draws one block's channel pair (h, g); h is drawn first. The
/// deterministic kind returns the means and consumes no randomness.
std::pair<double, double> draw_block(const ChannelModel& model, BlockRng& rng);

struct RateQuantiles {
    double p5 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

struct MonteCarloReport {
    std::uint64_t n_blocks = 0;
    std::uint64_t seed = 0;
    double mean_rate_tdd = 0.0;
    double mean_rate_fdd = 0.0;
    RateQuantiles quantiles_tdd{};
    RateQuantiles quantiles_fdd{};
};

/// Interpolating quantile (R type 7) of an unsorted, non-empty sample;
/// p must lie in [0, 1].
double quantile(std::vector<double> values, double p);

/// Re-optimizes both duplexing schemes on every fading block and aggregates
/// the achieved rates. Deterministic: the same (params, model, n_blocks,
/// seed, tol) always produces bit-identical reports.
MonteCarloReport monte_carlo(const SystemParams& params, const ChannelModel& model,
                             std::uint64_t n_blocks, std::uint64_t seed,
                             double tol = default_tol);

}  // namespace wpcn

#endif  // WPCN_FADING_HPP
