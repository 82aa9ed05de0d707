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

#include "wpcn/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace wpcn {

const char* to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::sigma2: return "sigma2";
        case SweepParameter::p_max: return "p_max";
        case SweepParameter::s_max: return "s_max";
        case SweepParameter::w0: return "w0";
        case SweepParameter::t_frame: return "t_frame";
        case SweepParameter::h_gain: return "h_gain";
        case SweepParameter::g_gain: return "g_gain";
    }
    return "unknown";
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

constexpr std::string_view base_keys[] = {"sigma2_dbm", "sigma2_watts", "p_max_watts",
                                          "s_max_w_per_hz", "w0_hz", "t_frame_s",
                                          "h_gain", "g_gain"};
constexpr std::string_view required_base_keys[] = {"p_max_watts", "s_max_w_per_hz", "w0_hz",
                                                   "t_frame_s", "h_gain", "g_gain"};
constexpr std::string_view sweep_keys[] = {"sweep_parameter", "sweep_values", "sweep_start",
                                           "sweep_stop", "sweep_n", "sweep_spacing"};
constexpr std::string_view mc_keys[] = {"mc_model", "mc_n_blocks", "mc_seed", "mc_mean_h",
                                        "mc_mean_g"};

template <std::size_t N>
bool contains_key(const std::string_view (&keys)[N], const std::string& key) {
    return std::find(std::begin(keys), std::end(keys), key) != std::end(keys);
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i)
        if (text[i] == '\n') ++line;
    return line;
}

double number_at(const json& doc, const std::string& key) {
    const json& value = doc.at(key);
    if (!value.is_number()) fail("key " + key + " must be a number");
    return value.get<double>();
}

std::uint64_t unsigned_at(const json& doc, const std::string& key) {
    const json& value = doc.at(key);
    if (!value.is_number_unsigned()) fail("key " + key + " must be a non-negative integer");
    return value.get<std::uint64_t>();
}

std::string string_at(const json& doc, const std::string& key) {
    const json& value = doc.at(key);
    if (!value.is_string()) fail("key " + key + " must be a string");
    return value.get<std::string>();
}

SweepParameter sweep_parameter_from(const std::string& name) {
    for (const SweepParameter p :
         {SweepParameter::sigma2, SweepParameter::p_max, SweepParameter::s_max,
          SweepParameter::w0, SweepParameter::t_frame, SweepParameter::h_gain,
          SweepParameter::g_gain})
        if (name == to_string(p)) return p;
    fail("sweep_parameter must be one of sigma2, p_max, s_max, w0, t_frame, h_gain, g_gain "
         "(got \"" + name + "\")");
}

std::vector<double> expand_range(double start, double stop, std::uint64_t n,
                                 const std::string& spacing) {
    std::vector<double> values(n);
    const double steps = static_cast<double>(n - 1);
    if (spacing == "linear") {
        for (std::uint64_t i = 0; i < n; ++i)
            values[i] = (i == n - 1) ? stop
                                     : start + (stop - start) * static_cast<double>(i) / steps;
    } else {  // log
        const double log_start = std::log(start);
        const double log_stop = std::log(stop);
        for (std::uint64_t i = 0; i < n; ++i)
            values[i] = (i == 0) ? start
                        : (i == n - 1)
                            ? stop
                            : std::exp(log_start +
                                       (log_stop - log_start) * static_cast<double>(i) / steps);
    }
    return values;
}

SweepSpec parse_sweep(const json& doc) {
    if (!doc.contains("sweep_parameter")) fail("missing key: sweep_parameter");
    SweepSpec spec;
    spec.parameter = sweep_parameter_from(string_at(doc, "sweep_parameter"));

    const bool has_values = doc.contains("sweep_values");
    const bool has_range = doc.contains("sweep_start") || doc.contains("sweep_stop") ||
                           doc.contains("sweep_n") || doc.contains("sweep_spacing");
    if (has_values && has_range)
        fail("provide either sweep_values or sweep_start/sweep_stop/sweep_n/sweep_spacing, "
             "not both");
    if (!has_values && !has_range)
        fail("missing key: sweep_values or sweep_start/sweep_stop/sweep_n/sweep_spacing");

    if (has_values) {
        const json& values = doc.at("sweep_values");
        if (!values.is_array() || values.empty())
            fail("sweep_values must be a non-empty array of positive numbers");
        spec.values.reserve(values.size());
        for (const json& v : values) {
            if (!v.is_number()) fail("sweep_values must be a non-empty array of positive numbers");
            const double x = v.get<double>();
            if (!(std::isfinite(x) && x > 0.0)) fail("sweep values must be finite and > 0");
            spec.values.push_back(x);
        }
        return spec;
    }

    for (const char* key : {"sweep_start", "sweep_stop", "sweep_n", "sweep_spacing"})
        if (!doc.contains(key)) fail(std::string("missing key: ") + key);
    const double start = number_at(doc, "sweep_start");
    const double stop = number_at(doc, "sweep_stop");
    if (!(std::isfinite(start) && start > 0.0) || !(std::isfinite(stop) && stop > 0.0))
        fail("sweep_start and sweep_stop must be finite and > 0");
    const std::uint64_t n = unsigned_at(doc, "sweep_n");
    if (n < 2) fail("sweep_n must be an integer >= 2");
    const std::string spacing = string_at(doc, "sweep_spacing");
    if (spacing != "linear" && spacing != "log")
        fail("sweep_spacing must be \"linear\" or \"log\" (got \"" + spacing + "\")");
    spec.values = expand_range(start, stop, n, spacing);
    return spec;
}

MonteCarloSpec parse_montecarlo(const json& doc, const SystemParams& params) {
    for (const char* key : {"mc_model", "mc_n_blocks"})
        if (!doc.contains(key)) fail(std::string("missing key: ") + key);

    MonteCarloSpec spec;
    const std::string model = string_at(doc, "mc_model");
    if (model == "deterministic")
        spec.model.kind = ChannelKind::deterministic;
    else if (model == "exponential")
        spec.model.kind = ChannelKind::exponential;
    else
        fail("mc_model must be \"deterministic\" or \"exponential\" (got \"" + model + "\")");

    spec.model.mean_h = doc.contains("mc_mean_h") ? number_at(doc, "mc_mean_h") : params.h_gain;
    spec.model.mean_g = doc.contains("mc_mean_g") ? number_at(doc, "mc_mean_g") : params.g_gain;
    if (!(std::isfinite(spec.model.mean_h) && spec.model.mean_h >= 0.0) ||
        !(std::isfinite(spec.model.mean_g) && spec.model.mean_g >= 0.0))
        fail("mc_mean_h and mc_mean_g must be finite and >= 0");

    spec.n_blocks = unsigned_at(doc, "mc_n_blocks");
    if (spec.n_blocks == 0) fail("mc_n_blocks must be an integer >= 1");
    spec.seed = doc.contains("mc_seed") ? unsigned_at(doc, "mc_seed") : 0;
    return spec;
}

}  // namespace

RunConfig parse_config(const std::string& text, Command command) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::ostringstream msg;
        msg << "config parse error at line " << line_of_byte(text, e.byte) << ": " << e.what();
        fail(msg.str());
    }
    if (!doc.is_object()) fail("config root must be a JSON object");

    std::string unknown;
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        bool known = contains_key(base_keys, key);
        if (!known && command == Command::sweep) known = contains_key(sweep_keys, key);
        if (!known && command == Command::montecarlo) known = contains_key(mc_keys, key);
        if (!known) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key;
        }
    }
    if (!unknown.empty()) fail("unknown key(s) for this command: " + unknown);

    const bool has_dbm = doc.contains("sigma2_dbm");
    const bool has_watts = doc.contains("sigma2_watts");
    if (has_dbm && has_watts)
        fail("both sigma2_dbm and sigma2_watts specified; provide exactly one");
    if (!has_dbm && !has_watts) fail("missing key: sigma2_dbm or sigma2_watts");
    for (const std::string_view key : required_base_keys)
        if (!doc.contains(std::string(key))) fail("missing key: " + std::string(key));

    RunConfig config;
    config.params.sigma2 =
        has_dbm ? dbm_to_watts(number_at(doc, "sigma2_dbm")) : number_at(doc, "sigma2_watts");
    config.params.p_max = number_at(doc, "p_max_watts");
    config.params.s_max = number_at(doc, "s_max_w_per_hz");
    config.params.w0 = number_at(doc, "w0_hz");
    config.params.t_frame = number_at(doc, "t_frame_s");
    config.params.h_gain = number_at(doc, "h_gain");
    config.params.g_gain = number_at(doc, "g_gain");

    if (command == Command::sweep) config.sweep = parse_sweep(doc);
    if (command == Command::montecarlo) config.montecarlo = parse_montecarlo(doc, config.params);
    return config;
}

RunConfig load_config(const std::string& path, Command command) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), command);
}

SystemParams with_parameter(SystemParams params, SweepParameter parameter, double value) {
    switch (parameter) {
        case SweepParameter::sigma2: params.sigma2 = value; break;
        case SweepParameter::p_max: params.p_max = value; break;
        case SweepParameter::s_max: params.s_max = value; break;
        case SweepParameter::w0: params.w0 = value; break;
        case SweepParameter::t_frame: params.t_frame = value; break;
        case SweepParameter::h_gain: params.h_gain = value; break;
        case SweepParameter::g_gain: params.g_gain = value; break;
    }
    return params;
}

}  // namespace wpcn
