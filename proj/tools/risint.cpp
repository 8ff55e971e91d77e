// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The risint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
// risint: run the RIS interference experiments and write CSV result tables.

#include "risint/risint.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace
{
    struct Options
    {
        std::string config;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> realizations;
        std::optional<unsigned> threads;
        std::string out;
        bool full_scale = false;
        bool print_config = false;
    };

    void add_common(CLI::App *cmd, Options &opt)
    {
        cmd->add_option("--config", opt.config, "JSON scenario configuration")->check(CLI::ExistingFile);
        cmd->add_option("--seed", opt.seed, "Master seed (u64)");
        cmd->add_option("--realizations", opt.realizations, "Monte Carlo realizations")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
        cmd->add_option("--out", opt.out, "CSV output path; metadata goes to <path>.meta.json");
        cmd->add_flag("--paper-scale", opt.full_scale, "Use the full-size ensembles of the reference study");
        cmd->add_flag("--print-config", opt.print_config, "Print the effective configuration and exit");
    }

    int run(risint::Scenario scenario, const Options &opt)
    {
        using namespace risint;
        ExperimentConfig cfg = opt.config.empty() ? default_config(scenario) : load_config(opt.config, scenario);
        if (opt.full_scale)
            apply_full_scale(cfg);
        if (opt.seed)
            cfg.seed = *opt.seed;
        if (opt.realizations)
            cfg.realizations = *opt.realizations;
        if (opt.threads)
            cfg.threads = *opt.threads;
        if (!opt.out.empty())
            cfg.output = opt.out;
        validate(cfg);

        if (opt.print_config)
        {
            std::cout << to_json(cfg).dump(2) << '\n';
            return 0;
        }

        const ResultTable table = run_experiment(cfg);
        if (cfg.output.empty())
        {
            table.write_csv(std::cout);
            return 0;
        }
        std::ofstream csv(cfg.output);
        if (!csv)
            throw ConfigError("cannot write '" + cfg.output + "'");
        table.write_csv(csv);
        std::ofstream meta(cfg.output + ".meta.json");
        if (!meta)
            throw ConfigError("cannot write '" + cfg.output + ".meta.json'");
        meta << table.metadata.dump(2) << '\n';
        std::cerr << "wrote " << table.size() << " rows to " << cfg.output << '\n';
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"RIS interference analysis: closed-form models and phase-exact simulation"};
    app.set_version_flag("--version", std::string(risint::tool_version));
    app.require_subcommand(1);

    Options opt;
    std::optional<risint::Scenario> chosen;
    for (auto scenario : {risint::Scenario::ris_size_sweep, risint::Scenario::moving_rx,
                          risint::Scenario::interference_validation, risint::Scenario::power_comparison})
    {
        static const char *descriptions[] = {
            "Desired RIS link power against RIS size (analytic, simulated, direct LOS)",
            "Received power along a receiver trajectory near a large RIS",
            "Monte Carlo interference via the RIS against the closed form",
            "Desired link and interference powers against RIS size (closed form)"};
        auto *cmd = app.add_subcommand(std::string(risint::scenario_name(scenario)),
                                       descriptions[static_cast<int>(scenario)]);
        add_common(cmd, opt);
        cmd->callback([&chosen, scenario] { chosen = scenario; });
    }

    CLI11_PARSE(app, argc, argv);

    try
    {
        return run(*chosen, opt);
    }
    catch (const risint::Error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
