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

#include "wpcn/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace wpcn {

namespace {

using ojson = nlohmann::ordered_json;

// 3 significant figures for human-facing tables.
std::string fmt3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", value);
    return buf;
}

const char* kind_name(ChannelKind kind) {
    return kind == ChannelKind::deterministic ? "deterministic" : "exponential";
}

std::string join_binding(const std::vector<Binding>& binding, const char* sep) {
    std::string out;
    for (const Binding b : binding) {
        if (!out.empty()) out += sep;
        out += to_string(b);
    }
    return out;
}

ojson params_json(const SystemParams& p) {
    return ojson{{"sigma2", p.sigma2}, {"p_max", p.p_max},     {"s_max", p.s_max},
                 {"w0", p.w0},         {"t_frame", p.t_frame}, {"h_gain", p.h_gain},
                 {"g_gain", p.g_gain}};
}

ojson binding_json(const std::vector<Binding>& binding) {
    ojson arr = ojson::array();
    for (const Binding b : binding) arr.push_back(to_string(b));
    return arr;
}

ojson tdd_json(const TddSolution& s) {
    return ojson{{"tau_star", s.tau_star}, {"p_d", s.p_d},   {"s_implied", s.s_implied},
                 {"gamma", s.gamma},       {"rate", s.rate}, {"binding", binding_json(s.binding)}};
}

ojson fdd_json(const FddSolution& s) {
    return ojson{{"beta_star", s.beta_star}, {"s", s.s},
                 {"p_d", s.p_d},             {"beta_cap", s.beta_cap},
                 {"gamma", s.gamma},         {"rate", s.rate},
                 {"binding", binding_json(s.binding)}};
}

ojson comparison_json(const Comparison& cmp) {
    return ojson{{"rate_tdd_bps", cmp.tdd.rate},
                 {"rate_fdd_bps", cmp.fdd.rate},
                 {"rate_ratio_fdd_over_tdd", cmp.rate_ratio},
                 {"winner", to_string(cmp.winner)}};
}

ojson quantiles_json(const RateQuantiles& q) {
    return ojson{{"p5", q.p5}, {"p50", q.p50}, {"p95", q.p95}};
}

ojson montecarlo_json(const MonteCarloSpec& spec, const MonteCarloReport& report) {
    return ojson{{"model", kind_name(spec.model.kind)},
                 {"mean_h", spec.model.mean_h},
                 {"mean_g", spec.model.mean_g},
                 {"n_blocks", report.n_blocks},
                 {"seed", report.seed},
                 {"mean_rate_tdd", report.mean_rate_tdd},
                 {"mean_rate_fdd", report.mean_rate_fdd},
                 {"quantiles", ojson{{"tdd", quantiles_json(report.quantiles_tdd)},
                                     {"fdd", quantiles_json(report.quantiles_fdd)}}}};
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string rows_to_csv(const Rows& rows) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) out += key + "," + value + "\n";
    return out;
}

void append_params_rows(Rows& rows, const SystemParams& p) {
    rows.emplace_back("params.sigma2", format_number(p.sigma2));
    rows.emplace_back("params.p_max", format_number(p.p_max));
    rows.emplace_back("params.s_max", format_number(p.s_max));
    rows.emplace_back("params.w0", format_number(p.w0));
    rows.emplace_back("params.t_frame", format_number(p.t_frame));
    rows.emplace_back("params.h_gain", format_number(p.h_gain));
    rows.emplace_back("params.g_gain", format_number(p.g_gain));
}

void append_solution_rows(Rows& rows, const Comparison& cmp) {
    rows.emplace_back("tdd.tau_star", format_number(cmp.tdd.tau_star));
    rows.emplace_back("tdd.p_d", format_number(cmp.tdd.p_d));
    rows.emplace_back("tdd.s_implied", format_number(cmp.tdd.s_implied));
    rows.emplace_back("tdd.gamma", format_number(cmp.tdd.gamma));
    rows.emplace_back("tdd.rate", format_number(cmp.tdd.rate));
    rows.emplace_back("tdd.binding", join_binding(cmp.tdd.binding, ";"));
    rows.emplace_back("fdd.beta_star", format_number(cmp.fdd.beta_star));
    rows.emplace_back("fdd.s", format_number(cmp.fdd.s));
    rows.emplace_back("fdd.p_d", format_number(cmp.fdd.p_d));
    rows.emplace_back("fdd.beta_cap", format_number(cmp.fdd.beta_cap));
    rows.emplace_back("fdd.gamma", format_number(cmp.fdd.gamma));
    rows.emplace_back("fdd.rate", format_number(cmp.fdd.rate));
    rows.emplace_back("fdd.binding", join_binding(cmp.fdd.binding, ";"));
}

void append_comparison_rows(Rows& rows, const Comparison& cmp) {
    rows.emplace_back("comparison.rate_tdd_bps", format_number(cmp.tdd.rate));
    rows.emplace_back("comparison.rate_fdd_bps", format_number(cmp.fdd.rate));
    rows.emplace_back("comparison.rate_ratio_fdd_over_tdd", format_number(cmp.rate_ratio));
    rows.emplace_back("comparison.winner", to_string(cmp.winner));
}

std::string kv_table(const std::string& section, const Rows& rows) {
    std::string out = section + "\n";
    for (const auto& [key, value] : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-14s %s\n", key.c_str(), value.c_str());
        out += line;
    }
    return out;
}

Rows params_table_rows(const SystemParams& p) {
    return Rows{{"sigma2", fmt3(p.sigma2) + " W"},
                {"p_max", fmt3(p.p_max) + " W"},
                {"s_max", fmt3(p.s_max) + " W/Hz"},
                {"w0", fmt3(p.w0) + " Hz"},
                {"t_frame", fmt3(p.t_frame) + " s"},
                {"h_gain", fmt3(p.h_gain)},
                {"g_gain", fmt3(p.g_gain)}};
}

Rows tdd_table_rows(const TddSolution& s) {
    return Rows{{"tau_star", fmt3(s.tau_star)},
                {"p_d", fmt3(s.p_d) + " W"},
                {"s_implied", fmt3(s.s_implied) + " W/Hz"},
                {"gamma", fmt3(s.gamma)},
                {"rate", fmt3(s.rate / 1000.0) + " kbit/s"},
                {"binding", join_binding(s.binding, ", ")}};
}

Rows fdd_table_rows(const FddSolution& s) {
    return Rows{{"beta_star", fmt3(s.beta_star)},
                {"s", fmt3(s.s) + " W/Hz"},
                {"p_d", fmt3(s.p_d) + " W"},
                {"beta_cap", fmt3(s.beta_cap)},
                {"gamma", fmt3(s.gamma)},
                {"rate", fmt3(s.rate / 1000.0) + " kbit/s"},
                {"binding", join_binding(s.binding, ", ")}};
}

Rows comparison_table_rows(const Comparison& cmp) {
    return Rows{{"rate_tdd", fmt3(cmp.tdd.rate / 1000.0) + " kbit/s"},
                {"rate_fdd", fmt3(cmp.fdd.rate / 1000.0) + " kbit/s"},
                {"ratio", fmt3(cmp.rate_ratio)},
                {"winner", to_string(cmp.winner)}};
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string render_solve(const SystemParams& params, const Comparison& cmp, OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            return dump(ojson{{"params", params_json(params)},
                              {"tdd", tdd_json(cmp.tdd)},
                              {"fdd", fdd_json(cmp.fdd)},
                              {"comparison", comparison_json(cmp)}});
        case OutputFormat::csv: {
            Rows rows;
            append_params_rows(rows, params);
            append_solution_rows(rows, cmp);
            append_comparison_rows(rows, cmp);
            return rows_to_csv(rows);
        }
        case OutputFormat::table:
            return kv_table("parameters", params_table_rows(params)) + "\n" +
                   kv_table("tdd", tdd_table_rows(cmp.tdd)) + "\n" +
                   kv_table("fdd", fdd_table_rows(cmp.fdd)) + "\n" +
                   kv_table("comparison", comparison_table_rows(cmp));
    }
    return {};
}

std::string render_compare(const Comparison& cmp, OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            return dump(ojson{{"comparison", comparison_json(cmp)}});
        case OutputFormat::csv: {
            Rows rows;
            append_comparison_rows(rows, cmp);
            return rows_to_csv(rows);
        }
        case OutputFormat::table:
            return kv_table("comparison", comparison_table_rows(cmp));
    }
    return {};
}

std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ojson arr = ojson::array();
            for (const SweepRow& r : rows)
                arr.push_back(ojson{{"param", r.param},
                                    {"value", r.value},
                                    {"tau_star", r.tau_star},
                                    {"rate_tdd_bps", r.rate_tdd_bps},
                                    {"beta_star", r.beta_star},
                                    {"beta_cap", r.beta_cap},
                                    {"rate_fdd_bps", r.rate_fdd_bps},
                                    {"winner", r.winner}});
            return dump(ojson{{"sweep", arr}});
        }
        case OutputFormat::csv: {
            std::string out = std::string(sweep_csv_header) + "\n";
            for (const SweepRow& r : rows) {
                out += r.param + "," + format_number(r.value) + "," +
                       format_number(r.tau_star) + "," + format_number(r.rate_tdd_bps) + "," +
                       format_number(r.beta_star) + "," + format_number(r.beta_cap) + "," +
                       format_number(r.rate_fdd_bps) + "," + r.winner + "\n";
            }
            return out;
        }
        case OutputFormat::table: {
            char line[256];
            std::snprintf(line, sizeof line, "%-8s %-12s %-10s %-13s %-10s %-10s %-13s %s\n",
                          "param", "value", "tau_star", "rate_tdd_bps", "beta_star", "beta_cap",
                          "rate_fdd_bps", "winner");
            std::string out = line;
            for (const SweepRow& r : rows) {
                std::snprintf(line, sizeof line, "%-8s %-12s %-10s %-13s %-10s %-10s %-13s %s\n",
                              r.param.c_str(), fmt3(r.value).c_str(), fmt3(r.tau_star).c_str(),
                              fmt3(r.rate_tdd_bps).c_str(), fmt3(r.beta_star).c_str(),
                              fmt3(r.beta_cap).c_str(), fmt3(r.rate_fdd_bps).c_str(),
                              r.winner.c_str());
                out += line;
            }
            return out;
        }
    }
    return {};
}

std::string render_montecarlo(const SystemParams& params, const MonteCarloSpec& spec,
                              const Comparison& baseline, const MonteCarloReport& report,
                              OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            return dump(ojson{{"params", params_json(params)},
                              {"tdd", tdd_json(baseline.tdd)},
                              {"fdd", fdd_json(baseline.fdd)},
                              {"comparison", comparison_json(baseline)},
                              {"montecarlo", montecarlo_json(spec, report)}});
        case OutputFormat::csv: {
            Rows rows;
            append_params_rows(rows, params);
            append_solution_rows(rows, baseline);
            append_comparison_rows(rows, baseline);
            rows.emplace_back("montecarlo.model", kind_name(spec.model.kind));
            rows.emplace_back("montecarlo.mean_h", format_number(spec.model.mean_h));
            rows.emplace_back("montecarlo.mean_g", format_number(spec.model.mean_g));
            rows.emplace_back("montecarlo.n_blocks", std::to_string(report.n_blocks));
            rows.emplace_back("montecarlo.seed", std::to_string(report.seed));
            rows.emplace_back("montecarlo.mean_rate_tdd", format_number(report.mean_rate_tdd));
            rows.emplace_back("montecarlo.mean_rate_fdd", format_number(report.mean_rate_fdd));
            rows.emplace_back("montecarlo.quantiles_tdd.p5",
                              format_number(report.quantiles_tdd.p5));
            rows.emplace_back("montecarlo.quantiles_tdd.p50",
                              format_number(report.quantiles_tdd.p50));
            rows.emplace_back("montecarlo.quantiles_tdd.p95",
                              format_number(report.quantiles_tdd.p95));
            rows.emplace_back("montecarlo.quantiles_fdd.p5",
                              format_number(report.quantiles_fdd.p5));
            rows.emplace_back("montecarlo.quantiles_fdd.p50",
                              format_number(report.quantiles_fdd.p50));
            rows.emplace_back("montecarlo.quantiles_fdd.p95",
                              format_number(report.quantiles_fdd.p95));
            return rows_to_csv(rows);
        }
        case OutputFormat::table: {
            Rows mc{{"model", kind_name(spec.model.kind)},
                    {"mean_h", fmt3(spec.model.mean_h)},
                    {"mean_g", fmt3(spec.model.mean_g)},
                    {"n_blocks", std::to_string(report.n_blocks)},
                    {"seed", std::to_string(report.seed)},
                    {"mean_rate_tdd", fmt3(report.mean_rate_tdd / 1000.0) + " kbit/s"},
                    {"mean_rate_fdd", fmt3(report.mean_rate_fdd / 1000.0) + " kbit/s"},
                    {"tdd_p5", fmt3(report.quantiles_tdd.p5 / 1000.0) + " kbit/s"},
                    {"tdd_p50", fmt3(report.quantiles_tdd.p50 / 1000.0) + " kbit/s"},
                    {"tdd_p95", fmt3(report.quantiles_tdd.p95 / 1000.0) + " kbit/s"},
                    {"fdd_p5", fmt3(report.quantiles_fdd.p5 / 1000.0) + " kbit/s"},
                    {"fdd_p50", fmt3(report.quantiles_fdd.p50 / 1000.0) + " kbit/s"},
                    {"fdd_p95", fmt3(report.quantiles_fdd.p95 / 1000.0) + " kbit/s"}};
            return kv_table("parameters", params_table_rows(params)) + "\n" +
                   kv_table("baseline comparison", comparison_table_rows(baseline)) + "\n" +
                   kv_table("montecarlo", mc);
        }
    }
    return {};
}

}  // namespace wpcn
