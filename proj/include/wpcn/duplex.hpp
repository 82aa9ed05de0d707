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

#ifndef WPCN_DUPLEX_HPP
#define WPCN_DUPLEX_HPP

#include <vector>

#include "wpcn/model.hpp"
#include "wpcn/optimizer.hpp"

namespace wpcn {

/// Constraints that can be active at an optimal operating point.
enum class Binding {
    psd_cap,                  ///< downlink PSD sits at s_max
    power_cap,                ///< downlink power sits at p_max
    time_unit_interval,       ///< tau* is at an end of [0, 1]
    bandwidth_unit_interval,  ///< beta* is at an end of [0, 1]
    interior,                 ///< no constraint active
};

enum class Winner { tdd, fdd, tie };

const char* to_string(Binding binding);
const char* to_string(Winner winner);

/// Two rates closer than this (relative to the larger one) compare as a tie.
inline constexpr double tie_rel_tol = 1e-9;

/// Optimal TDD operating point: downlink at full allowed power for a tau
/// fraction of the frame, uplink in the rest.
struct TddSolution {
    double tau_star;   ///< optimal energy time share in [0, 1]
    double p_d;        ///< downlink power, min(p_max, w0 * s_max) [W]
    double s_implied;  ///< p_d spread over the full band, p_d / w0 [W/Hz]
    double gamma;      ///< lumped SNR constant
    double rate;       ///< optimal uplink throughput [bit/s]
    std::vector<Binding> binding;  ///< active constraints, fixed order
};

/// Optimal FDD operating point: downlink in a beta share of the band at PSD
/// s_max, uplink in the rest, both for the whole frame.
struct FddSolution {
    double beta_star;  ///< optimal energy bandwidth share in [0, beta_cap]
    double s;          ///< downlink PSD, always s_max [W/Hz]
    double p_d;        ///< downlink power, beta_star * w0 * s [W]
    double beta_cap;   ///< upper bound min(1, p_max / (w0 * s_max))
    double gamma;      ///< lumped SNR constant
    double rate;       ///< optimal uplink throughput [bit/s]
    std::vector<Binding> binding;  ///< active constraints, fixed order
};

/// Side-by-side result of both duplexing schemes on the same parameters.
struct Comparison {
    TddSolution tdd;
    FddSolution fdd;
    double rate_ratio;  ///< FDD rate over TDD rate; 1 when both are zero
    Winner winner;
};

/// Solves the TDD scheme. The downlink power has a closed form,
/// p_d = min(p_max, w0 * s_max); only the time split is searched.
TddSolution solve_tdd(const SystemParams& params, double tol = default_tol);

/// Solves the FDD scheme. The PSD has a closed form, s = s_max; the
/// bandwidth split is searched on [0, beta_cap].
FddSolution solve_fdd(const SystemParams& params, double tol = default_tol);

/// Solves both schemes and labels the winner, with ties decided by
/// tie_rel_tol.
Comparison compare(const SystemParams& params, double tol = default_tol);

}  // namespace wpcn

#endif  // WPCN_DUPLEX_HPP
