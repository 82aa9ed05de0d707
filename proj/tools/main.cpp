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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wpcn/config.hpp"
#include "wpcn/duplex.hpp"
#include "wpcn/fading.hpp"
#include "wpcn/report.hpp"

namespace {

// Exit codes are a stable contract: 0 success, 1 configuration/usage error,
// 2 physically infeasible parameters.
constexpr int exit_ok = 0;
constexpr int exit_config_error = 1;
constexpr int exit_infeasible = 2;

struct CommonOptions {
    std::string config_path;
    std::string format = "table";
    std::string output_path;
    double tol = wpcn::default_tol;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("config", opts.config_path, "path to the JSON run configuration")
        ->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output_path,
                    "write the report to this file instead of stdout");
    cmd->add_option("--tol", opts.tol, "optimizer bracket tolerance on the resource fraction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

wpcn::OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return wpcn::OutputFormat::csv;
    if (name == "json") return wpcn::OutputFormat::json;
    return wpcn::OutputFormat::table;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + output_path);
    out << text;
    if (!out) throw std::runtime_error("error while writing output file: " + output_path);
}

int run_command(wpcn::Command command, const CommonOptions& opts,
                std::optional<std::uint64_t> seed_override) {
    const wpcn::RunConfig config = wpcn::load_config(opts.config_path, command);
    const wpcn::OutputFormat format = parse_format(opts.format);
    config.params.validate();

    switch (command) {
        case wpcn::Command::solve: {
            const wpcn::Comparison cmp = wpcn::compare(config.params, opts.tol);
            emit(wpcn::render_solve(config.params, cmp, format), opts.output_path);
            break;
        }
        case wpcn::Command::compare: {
            const wpcn::Comparison cmp = wpcn::compare(config.params, opts.tol);
            emit(wpcn::render_compare(cmp, format), opts.output_path);
            break;
        }
        case wpcn::Command::sweep: {
            const wpcn::SweepSpec& sweep = *config.sweep;
            std::vector<wpcn::SweepRow> rows;
            rows.reserve(sweep.values.size());
            for (const double value : sweep.values) {
                const wpcn::SystemParams p =
                    wpcn::with_parameter(config.params, sweep.parameter, value);
                const wpcn::Comparison cmp = wpcn::compare(p, opts.tol);
                rows.push_back(wpcn::SweepRow{wpcn::to_string(sweep.parameter), value,
                                              cmp.tdd.tau_star, cmp.tdd.rate, cmp.fdd.beta_star,
                                              cmp.fdd.beta_cap, cmp.fdd.rate,
                                              wpcn::to_string(cmp.winner)});
            }
            emit(wpcn::render_sweep(rows, format), opts.output_path);
            break;
        }
        case wpcn::Command::montecarlo: {
            wpcn::MonteCarloSpec spec = *config.montecarlo;
            if (seed_override) spec.seed = *seed_override;
            const wpcn::Comparison baseline = wpcn::compare(config.params, opts.tol);
            const wpcn::MonteCarloReport report = wpcn::monte_carlo(
                config.params, spec.model, spec.n_blocks, spec.seed, opts.tol);
            emit(wpcn::render_montecarlo(config.params, spec, baseline, report, format),
                 opts.output_path);
            break;
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wpcnsim - uplink throughput of a wireless powered network under TDD and FDD"};
    app.require_subcommand(1);

    CommonOptions solve_opts, compare_opts, sweep_opts, mc_opts;
    std::uint64_t seed_value = 0;

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "optimal TDD and FDD operating points for one configuration");
    add_common_options(solve_cmd, solve_opts);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "TDD/FDD rate comparison only");
    add_common_options(compare_cmd, compare_opts);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "re-solve both schemes across a parameter sweep");
    add_common_options(sweep_cmd, sweep_opts);

    CLI::App* mc_cmd = app.add_subcommand(
        "montecarlo", "block-fading Monte-Carlo with per-block re-optimization");
    add_common_options(mc_cmd, mc_opts);
    CLI::Option* seed_opt =
        mc_cmd->add_option("--seed", seed_value, "override the mc_seed value from the config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    wpcn::Command command = wpcn::Command::solve;
    const CommonOptions* opts = &solve_opts;
    if (compare_cmd->parsed()) {
        command = wpcn::Command::compare;
        opts = &compare_opts;
    } else if (sweep_cmd->parsed()) {
        command = wpcn::Command::sweep;
        opts = &sweep_opts;
    } else if (mc_cmd->parsed()) {
        command = wpcn::Command::montecarlo;
        opts = &mc_opts;
    }

    std::optional<std::uint64_t> seed_override;
    if (seed_opt->count() > 0) seed_override = seed_value;

    try {
        return run_command(command, *opts, seed_override);
    } catch (const wpcn::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "infeasible parameters: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}
