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

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "wpcn/duplex.hpp"

namespace {

wpcn::SystemParams reference_params() {
    return wpcn::SystemParams{1e-15, 0.1, 1e-5, 1e4, 1e-3, 1e-6, 1e-6};
}

}  // namespace

TEST_CASE("splitmix64 reference sequence") {
    // Published outputs of splitmix64 for state 0.
    wpcn::BlockRng rng(0);
    CHECK(rng.next_u64() == 0xe220a8397b1dcdafull);
    CHECK(rng.next_u64() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next_u64() == 0x06c45d188009454full);
}

TEST_CASE("unit draws are reproducible, in range, and frozen") {
    wpcn::BlockRng rng = wpcn::BlockRng::for_block(7, 0);
    CHECK(rng.next_unit() == 0.7215081806049704);
    CHECK(rng.next_unit() == 0.6497043364684558);
    CHECK(rng.next_unit() == 0.549374324919324);
    CHECK(rng.next_unit() == 0.6042348053683146);

    wpcn::BlockRng again = wpcn::BlockRng::for_block(7, 0);
    CHECK(again.next_unit() == 0.7215081806049704);

    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    wpcn::BlockRng stream = wpcn::BlockRng::for_block(2026, 0);
    for (int i = 0; i < n; ++i) {
        const double u = stream.next_unit();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("block streams are distinct and order-independent") {
    std::set<std::uint64_t> first_outputs;
    for (std::uint64_t block = 0; block < 100; ++block) {
        wpcn::BlockRng rng = wpcn::BlockRng::for_block(42, block);
        first_outputs.insert(rng.next_u64());
    }
    CHECK(first_outputs.size() == 100);

    // Different seeds give different streams for the same block.
    wpcn::BlockRng a = wpcn::BlockRng::for_block(1, 5);
    wpcn::BlockRng b = wpcn::BlockRng::for_block(2, 5);
    CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("exponential draws: frozen values, degenerate mean, domain") {
    wpcn::BlockRng rng = wpcn::BlockRng::for_block(42, 0);
    // h then g for block 0 under seed 42, mean 1e-6.
    CHECK(rng.next_exponential(1e-6) == doctest::Approx(1.069174108947751e-06).epsilon(1e-12));
    CHECK(rng.next_exponential(1e-6) == doctest::Approx(4.52623318556421e-08).epsilon(1e-12));

    wpcn::BlockRng rng1 = wpcn::BlockRng::for_block(42, 1);
    CHECK(rng1.next_exponential(1e-6) ==
          doctest::Approx(1.3377834419759317e-08).epsilon(1e-12));

    wpcn::BlockRng z = wpcn::BlockRng::for_block(0, 0);
    CHECK(z.next_exponential(0.0) == 0.0);
    CHECK_THROWS_AS(z.next_exponential(-1.0), std::domain_error);
    CHECK_THROWS_AS(z.next_exponential(std::nan("")), std::domain_error);
}

TEST_CASE("exponential sample statistics") {
    const int n = 200000;
    double sum = 0.0, sum_sq = 0.0;
    for (int block = 0; block < n; ++block) {
        wpcn::BlockRng rng = wpcn::BlockRng::for_block(123, block);
        const double x = rng.next_exponential(2.0);
        CHECK(x >= 0.0);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    // 4.5-sigma bands around the exponential's mean 2 and variance 4.
    CHECK(mean == doctest::Approx(2.0).epsilon(0.01));
    CHECK(var == doctest::Approx(4.0).epsilon(0.06));
}

TEST_CASE("draw_block honors the channel kind") {
    const wpcn::ChannelModel fixed{wpcn::ChannelKind::deterministic, 3e-6, 4e-6};
    wpcn::BlockRng rng = wpcn::BlockRng::for_block(9, 0);
    const auto [h, g] = wpcn::draw_block(fixed, rng);
    CHECK(h == 3e-6);
    CHECK(g == 4e-6);
    // No randomness consumed: the stream still starts at its first draw.
    CHECK(rng.next_unit() == wpcn::BlockRng::for_block(9, 0).next_unit());

    const wpcn::ChannelModel fading{wpcn::ChannelKind::exponential, 1e-6, 1e-6};
    wpcn::BlockRng rng2 = wpcn::BlockRng::for_block(42, 0);
    const auto [h2, g2] = wpcn::draw_block(fading, rng2);
    CHECK(h2 == doctest::Approx(1.069174108947751e-06).epsilon(1e-12));
    CHECK(g2 == doctest::Approx(4.52623318556421e-08).epsilon(1e-12));

    wpcn::ChannelModel bad = fading;
    bad.mean_h = -1.0;
    CHECK_THROWS_AS(wpcn::draw_block(bad, rng2), std::invalid_argument);
}

TEST_CASE("quantile follows the interpolating convention") {
    const std::vector<double> v{5.0, 1.0, 4.0, 2.0, 3.0};  // unsorted on purpose
    CHECK(wpcn::quantile(v, 0.05) == 1.2);
    CHECK(wpcn::quantile(v, 0.50) == 3.0);
    CHECK(wpcn::quantile(v, 0.95) == 4.8);
    CHECK(wpcn::quantile(v, 0.0) == 1.0);
    CHECK(wpcn::quantile(v, 1.0) == 5.0);
    CHECK(wpcn::quantile({7.5}, 0.5) == 7.5);
    CHECK_THROWS_AS(wpcn::quantile(v, -0.1), std::domain_error);
    CHECK_THROWS_AS(wpcn::quantile(v, 1.1), std::domain_error);
    CHECK_THROWS_AS(wpcn::quantile({}, 0.5), std::invalid_argument);
}

TEST_CASE("deterministic Monte-Carlo degenerates to the single solve") {
    const wpcn::SystemParams params = reference_params();
    const wpcn::ChannelModel model{wpcn::ChannelKind::deterministic, params.h_gain,
                                   params.g_gain};
    const wpcn::MonteCarloReport report = wpcn::monte_carlo(params, model, 10, 99);
    const double rate_tdd = wpcn::solve_tdd(params).rate;
    const double rate_fdd = wpcn::solve_fdd(params).rate;

    CHECK(report.n_blocks == 10);
    CHECK(report.seed == 99);
    CHECK(report.quantiles_tdd.p5 == rate_tdd);
    CHECK(report.quantiles_tdd.p50 == rate_tdd);
    CHECK(report.quantiles_tdd.p95 == rate_tdd);
    CHECK(report.quantiles_fdd.p50 == rate_fdd);
    CHECK(report.mean_rate_tdd == doctest::Approx(rate_tdd).epsilon(1e-12));
    CHECK(report.mean_rate_fdd == doctest::Approx(rate_fdd).epsilon(1e-12));
}

TEST_CASE("Monte-Carlo is deterministic per seed and varies across seeds") {
    const wpcn::SystemParams params = reference_params();
    const wpcn::ChannelModel model{wpcn::ChannelKind::exponential, 1e-6, 1e-6};

    const wpcn::MonteCarloReport a = wpcn::monte_carlo(params, model, 500, 11);
    const wpcn::MonteCarloReport b = wpcn::monte_carlo(params, model, 500, 11);
    CHECK(a.mean_rate_tdd == b.mean_rate_tdd);
    CHECK(a.mean_rate_fdd == b.mean_rate_fdd);
    CHECK(a.quantiles_tdd.p5 == b.quantiles_tdd.p5);
    CHECK(a.quantiles_tdd.p50 == b.quantiles_tdd.p50);
    CHECK(a.quantiles_tdd.p95 == b.quantiles_tdd.p95);
    CHECK(a.quantiles_fdd.p95 == b.quantiles_fdd.p95);

    const wpcn::MonteCarloReport c = wpcn::monte_carlo(params, model, 500, 12);
    CHECK(a.mean_rate_tdd != c.mean_rate_tdd);

    CHECK(a.mean_rate_tdd > 0.0);
    CHECK(a.mean_rate_fdd >= a.mean_rate_tdd * (1.0 - 1e-9));
    CHECK(a.quantiles_tdd.p5 <= a.quantiles_tdd.p50);
    CHECK(a.quantiles_tdd.p50 <= a.quantiles_tdd.p95);
}

TEST_CASE("Monte-Carlo input validation") {
    const wpcn::SystemParams params = reference_params();
    const wpcn::ChannelModel model{wpcn::ChannelKind::exponential, 1e-6, 1e-6};
    CHECK_THROWS_AS(wpcn::monte_carlo(params, model, 0, 1), std::invalid_argument);

    wpcn::SystemParams bad = params;
    bad.w0 = -1.0;
    CHECK_THROWS_AS(wpcn::monte_carlo(bad, model, 10, 1), std::invalid_argument);

    wpcn::ChannelModel bad_model = model;
    bad_model.mean_g = -2.0;
    CHECK_THROWS_AS(wpcn::monte_carlo(params, bad_model, 10, 1), std::invalid_argument);
}
