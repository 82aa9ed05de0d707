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

#ifndef WPCN_REPORT_HPP
#define WPCN_REPORT_HPP

#include <string>
#include <vector>

#include "wpcn/config.hpp"
#include "wpcn/duplex.hpp"
#include "wpcn/fading.hpp"

namespace wpcn {

enum class OutputFormat { table, csv, json };

/// One line of a parameter sweep; field order matches the CSV columns.
struct SweepRow {
    std::string param;
    double value = 0.0;
    double tau_star = 0.0;
    double rate_tdd_bps = 0.0;
    double beta_star = 0.0;
    double beta_cap = 0.0;
    double rate_fdd_bps = 0.0;
    std::string winner;
};

/// Column header of sweep CSV output. Stable: downstream tooling may key on
/// it byte-for-byte.
inline constexpr const char* sweep_csv_header =
    "param,value,tau_star,rate_tdd_bps,beta_star,beta_cap,rate_fdd_bps,winner";

/// Shortest decimal string that round-trips to exactly `value`.
std::string format_number(double value);

/// Full single-run report: parameters, both solutions, comparison.
std::string render_solve(const SystemParams& params, const Comparison& cmp, OutputFormat format);

/// Just the comparison section of a run.
std::string render_compare(const Comparison& cmp, OutputFormat format);

/// Parameter sweep rows. CSV uses sweep_csv_header.
std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format);

/// Monte-Carlo report plus the deterministic baseline solve at the
/// configured gains.
std::string render_montecarlo(const SystemParams& params, const MonteCarloSpec& spec,
                              const Comparison& baseline, const MonteCarloReport& report,
                              OutputFormat format);

}  // namespace wpcn

#endif  // WPCN_REPORT_HPP
