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

#include "wpcn/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpcn {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_domain(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(sigma2) && sigma2 > 0.0, "sigma2 must be finite and > 0");
    require(std::isfinite(p_max) && p_max > 0.0, "p_max must be finite and > 0");
    require(std::isfinite(s_max) && s_max > 0.0, "s_max must be finite and > 0");
    require(std::isfinite(w0) && w0 > 0.0, "w0 must be finite and > 0");
    require(std::isfinite(t_frame) && t_frame > 0.0, "t_frame must be finite and > 0");
    require(std::isfinite(h_gain) && h_gain >= 0.0, "h_gain must be finite and >= 0");
    require(std::isfinite(g_gain) && g_gain >= 0.0, "g_gain must be finite and >= 0");
}

void ObjectiveSpec::validate() const {
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be finite and >= 0");
    require(std::isfinite(w0) && w0 > 0.0, "w0 must be finite and > 0");
    require(std::isfinite(x_lo) && std::isfinite(x_hi) && 0.0 <= x_lo && x_lo <= x_hi && x_hi <= 1.0,
            "feasible interval must satisfy 0 <= x_lo <= x_hi <= 1");
}

double dbm_to_watts(double level_dbm) {
    if (!std::isfinite(level_dbm)) throw std::invalid_argument("dBm level must be finite");
    return std::pow(10.0, (level_dbm - 30.0) / 10.0);
}

double gamma_tdd(const SystemParams& params, double p_d) {
    params.validate();
    require_domain(std::isfinite(p_d) && p_d >= 0.0, "p_d must be finite and >= 0");
    return params.g_gain * params.h_gain * p_d / params.sigma2;
}

double gamma_fdd(const SystemParams& params, double s) {
    params.validate();
    require_domain(std::isfinite(s) && s >= 0.0, "s must be finite and >= 0");
    return params.g_gain * params.h_gain * s * params.w0 / params.sigma2;
}

double throughput(const ObjectiveSpec& obj, double x) {
    require_domain(x >= 0.0 && x <= 1.0, "x must lie in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    // log2(1 + y) via log1p keeps precision for the tiny-gamma regime.
    const double y = obj.gamma * x / (1.0 - x);
    return (1.0 - x) * obj.w0 * std::log1p(y) * std::numbers::log2e;
}

EnergyAccount energy_account_tdd(const SystemParams& params, double p_d, double tau) {
    params.validate();
    require_domain(std::isfinite(p_d) && p_d >= 0.0, "p_d must be finite and >= 0");
    require_domain(tau >= 0.0 && tau < 1.0, "tau must lie in [0, 1)");
    EnergyAccount acct{};
    acct.p_d = p_d;
    acct.epsilon = tau * params.t_frame * p_d * params.h_gain;
    acct.p_u = acct.epsilon / ((1.0 - tau) * params.t_frame);
    return acct;
}

EnergyAccount energy_account_fdd(const SystemParams& params, double beta, double s) {
    params.validate();
    require_domain(std::isfinite(s) && s >= 0.0, "s must be finite and >= 0");
    require_domain(beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
    EnergyAccount acct{};
    acct.p_d = beta * params.w0 * s;
    acct.epsilon = params.t_frame * acct.p_d * params.h_gain;
    acct.p_u = acct.epsilon / params.t_frame;
    return acct;
}

}  // namespace wpcn
