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

#ifndef WPCN_CONFIG_HPP
#define WPCN_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpcn/fading.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

/// Structural problem in a run configuration: unreadable file, malformed
/// JSON, missing/unknown/mistyped keys, bad sweep or Monte-Carlo spec.
/// Distinct from physically infeasible parameter values, which are reported
/// by SystemParams::validate as std::invalid_argument.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { solve, compare, sweep, montecarlo };

/// SystemParams field selected by a parameter sweep.
enum class SweepParameter { sigma2, p_max, s_max, w0, t_frame, h_gain, g_gain };

const char* to_string(SweepParameter parameter);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::s_max;
    std::vector<double> values;  ///< expanded sweep points, in sweep order
};

struct MonteCarloSpec {
    ChannelModel model{};
    std::uint64_t n_blocks = 0;
    std::uint64_t seed = 0;
};

struct RunConfig {
    SystemParams params{};
    std::optional<SweepSpec> sweep;          ///< present iff command == sweep
    std::optional<MonteCarloSpec> montecarlo;  ///< present iff command == montecarlo
};

/// Parses a JSON configuration document. The accepted key set depends on the
/// command: the base system keys are always required, sweep_* keys are valid
/// (and required) only for Command::sweep, mc_* keys only for
/// Command::montecarlo. Unknown keys are rejected by name. Exactly one of
/// sigma2_dbm / sigma2_watts must be given. Throws ConfigError.
RunConfig parse_config(const std::string& text, Command command);

/// Reads the file at `path` and parses it with parse_config.
RunConfig load_config(const std::string& path, Command command);

/// Returns params with the selected field replaced by value.
SystemParams with_parameter(SystemParams params, SweepParameter parameter, double value);

}  // namespace wpcn

#endif  // WPCN_CONFIG_HPP
