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

#include "wpcn/duplex.hpp"

#include <algorithm>
#include <cmath>

namespace wpcn {

const char* to_string(Binding binding) {
    switch (binding) {
        case Binding::psd_cap: return "psd_cap";
        case Binding::power_cap: return "power_cap";
        case Binding::time_unit_interval: return "time_unit_interval";
        case Binding::bandwidth_unit_interval: return "bandwidth_unit_interval";
        case Binding::interior: return "interior";
    }
    return "unknown";
}

const char* to_string(Winner winner) {
    switch (winner) {
        case Winner::tdd: return "tdd";
        case Winner::fdd: return "fdd";
        case Winner::tie: return "tie";
    }
    return "unknown";
}

TddSolution solve_tdd(const SystemParams& params, double tol) {
    params.validate();

    TddSolution sol{};
    // Throughput is increasing in the downlink power, so p_d sits at
    // whichever cap is tighter: the power cap or the PSD cap spread over the
    // full band.
    sol.p_d = std::min(params.p_max, params.w0 * params.s_max);
    sol.s_implied = sol.p_d / params.w0;
    sol.gamma = gamma_tdd(params, sol.p_d);

    const ObjectiveSpec obj{sol.gamma, params.w0, 0.0, 1.0};
    const MaximizerResult opt =
        maximize_concave([&obj](double x) { return throughput(obj, x); }, 0.0, 1.0, tol);
    sol.tau_star = opt.x_star;
    sol.rate = opt.f_star;

    if (params.w0 * params.s_max <= params.p_max) sol.binding.push_back(Binding::psd_cap);
    if (params.p_max <= params.w0 * params.s_max) sol.binding.push_back(Binding::power_cap);
    if (sol.tau_star == 0.0 || sol.tau_star == 1.0)
        sol.binding.push_back(Binding::time_unit_interval);
    return sol;
}

FddSolution solve_fdd(const SystemParams& params, double tol) {
    params.validate();

    FddSolution sol{};
    // Throughput is increasing in the downlink PSD, so s sits at s_max; the
    // power cap then limits how much of the band the downlink may occupy.
    sol.s = params.s_max;
    sol.gamma = gamma_fdd(params, sol.s);
    sol.beta_cap = std::min(1.0, params.p_max / (params.w0 * params.s_max));

    const ObjectiveSpec obj{sol.gamma, params.w0, 0.0, sol.beta_cap};
    const MaximizerResult opt =
        maximize_concave([&obj](double x) { return throughput(obj, x); }, 0.0, sol.beta_cap, tol);
    sol.beta_star = opt.x_star;
    sol.rate = opt.f_star;
    sol.p_d = sol.beta_star * params.w0 * sol.s;

    if (sol.beta_star == sol.beta_cap && sol.beta_cap < 1.0)
        sol.binding.push_back(Binding::power_cap);
    if (sol.beta_star == 0.0 || sol.beta_star == 1.0)
        sol.binding.push_back(Binding::bandwidth_unit_interval);
    if (sol.binding.empty()) sol.binding.push_back(Binding::interior);
    return sol;
}

Comparison compare(const SystemParams& params, double tol) {
    Comparison cmp{solve_tdd(params, tol), solve_fdd(params, tol), 1.0, Winner::tie};
    const double rt = cmp.tdd.rate;
    const double rf = cmp.fdd.rate;

    // Both rates vanish together (only a zero channel gain can zero either
    // one), so the ratio is defined as 1 in that case.
    if (rt == 0.0 && rf == 0.0) {
        cmp.rate_ratio = 1.0;
        cmp.winner = Winner::tie;
        return cmp;
    }

    cmp.rate_ratio = rf / rt;
    const double scale = std::max(std::abs(rt), std::abs(rf));
    if (std::abs(rf - rt) <= tie_rel_tol * scale)
        cmp.winner = Winner::tie;
    else
        cmp.winner = (rf > rt) ? Winner::fdd : Winner::tdd;
    return cmp;
}

}  // namespace wpcn
