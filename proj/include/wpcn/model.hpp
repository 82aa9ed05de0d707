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

#ifndef WPCN_MODEL_HPP
#define WPCN_MODEL_HPP

namespace wpcn {

/// Physical parameters of the single-user network: one hybrid access point
/// that first transfers energy to a harvesting user and then receives the
/// user's uplink data, either in separate time slots (TDD) or in separate
/// sub-bands (FDD).
///
/// All quantities are SI (watts, hertz, seconds). Channel gains are squared
/// magnitudes of the fading coefficients and therefore dimensionless.
struct SystemParams {
    double sigma2;   ///< noise power over the full band at the receiver [W]
    double p_max;    ///< access point transmit power cap [W]
    double s_max;    ///< access point power spectral density cap [W/Hz]
    double w0;       ///< total system bandwidth [Hz]
    double t_frame;  ///< frame duration [s]
    double h_gain;   ///< downlink (energy) channel power gain
    double g_gain;   ///< uplink (data) channel power gain

    /// Throws std::invalid_argument unless every field is finite, the gains
    /// are >= 0 and everything else is strictly positive.
    void validate() const;
};

/// The shared uplink-throughput objective
///
///     f(x) = (1 - x) * w0 * log2(1 + gamma * x / (1 - x))
///
/// where x is the resource fraction granted to energy transfer: the time
/// share tau under TDD, the bandwidth share beta under FDD. Both schemes
/// maximize this one function; they differ only in the lumped SNR constant
/// gamma and in the feasible interval [x_lo, x_hi].
struct ObjectiveSpec {
    double gamma;  ///< lumped effective SNR constant, >= 0
    double w0;     ///< bandwidth [Hz]
    double x_lo;   ///< lower end of the feasible interval, in [0, 1]
    double x_hi;   ///< upper end of the feasible interval, in [0, 1]

    void validate() const;
};

/// Per-frame energy bookkeeping.
struct EnergyAccount {
    double epsilon;  ///< energy harvested by the user in one frame [J]
    double p_u;      ///< user uplink transmit power [W]
    double p_d;      ///< access point downlink transmit power [W]
};

/// dBm to watts; 0 dBm is 1 mW. Rejects non-finite input.
double dbm_to_watts(double level_dbm);

/// Lumped SNR for TDD at downlink power p_d: gamma = g * h * p_d / sigma2.
double gamma_tdd(const SystemParams& params, double p_d);

/// Lumped SNR for FDD at downlink PSD s: gamma = g * h * s * w0 / sigma2.
double gamma_fdd(const SystemParams& params, double s);

/// Evaluates the throughput objective at x in [0, 1]. The endpoints are
/// defined by their limits: f(0) = f(1) = 0 (no harvested energy / no
/// payload resource). The spec is assumed valid; x is range-checked and
/// rejected with std::domain_error otherwise.
double throughput(const ObjectiveSpec& obj, double x);

/// TDD energy account: the user harvests eps = tau * T * p_d * h during the
/// energy slot and spends it evenly over the data slot, p_u = eps /
/// ((1 - tau) * T). tau = 1 leaves no data slot and is rejected.
EnergyAccount energy_account_tdd(const SystemParams& params, double p_d, double tau);

/// FDD energy account: the downlink occupies a beta * w0 band at PSD s for
/// the whole frame, so p_d = beta * w0 * s, eps = T * p_d * h, and the
/// simultaneous uplink power is p_u = eps / T.
EnergyAccount energy_account_fdd(const SystemParams& params, double beta, double s);

}  // namespace wpcn

#endif  // WPCN_MODEL_HPP
