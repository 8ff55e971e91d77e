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
#include "risint/config.hpp"
#include "risint/experiments.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace risint;

namespace
{
    std::string field_of(const std::string &text, std::optional<Scenario> fallback = std::nullopt)
    {
        try
        {
            parse_config_text(text, fallback);
        }
        catch (const ValidationError &e)
        {
            return e.field();
        }
        return "";
    }
}

TEST(Scenario, NamesRoundTrip)
{
    for (auto s : {Scenario::ris_size_sweep, Scenario::moving_rx, Scenario::interference_validation,
                   Scenario::power_comparison})
        EXPECT_EQ(parse_scenario(scenario_name(s)), s);
    EXPECT_FALSE(parse_scenario("fig3"));
}

TEST(ParseConfig, MinimalDocumentTakesDefaults)
{
    const auto cfg = parse_config_text(R"({"scenario": "ris-size-sweep"})");
    const auto def = default_config(Scenario::ris_size_sweep);
    EXPECT_EQ(cfg.frequency, 140e9);
    EXPECT_EQ(cfg.ris_sides, def.ris_sides);
    EXPECT_EQ(cfg.tx.position, def.tx.position);
    EXPECT_EQ(cfg.realizations, 500u);
    EXPECT_EQ(cfg.seed, 1u);
}

TEST(ParseConfig, FallbackScenario)
{
    EXPECT_EQ(parse_config_text("{}", Scenario::moving_rx).scenario, Scenario::moving_rx);
    EXPECT_EQ(field_of("{}"), "scenario");
    EXPECT_EQ(field_of(R"({"scenario": "moving-rx"})", Scenario::power_comparison), "scenario");
    EXPECT_EQ(field_of(R"({"scenario": "nope"})"), "scenario");
}

TEST(ParseConfig, OverridesApply)
{
    const auto cfg = parse_config_text(R"({
        "scenario": "interference-validation",
        "scene": {"frequency": 100e9, "absorption": 0.01, "ris": {"elements": [8, 4]},
                  "tx": {"elements": [2, 2], "position": [-1, 3, 0.5]}},
        "sweep": {"ris_sides": [3, 5]},
        "population": {"mean_users": 12, "transmit_prob": 0.4, "interferer_elements": [2, 2]},
        "realizations": 7, "seed": 99, "threads": 2})");
    EXPECT_EQ(cfg.frequency, 100e9);
    EXPECT_EQ(cfg.absorption, 0.01);
    EXPECT_EQ(cfg.ris.nx, 8u);
    EXPECT_EQ(cfg.ris.ny, 4u);
    EXPECT_EQ(cfg.tx.nx, 2u);
    EXPECT_EQ(cfg.tx.position, (Vec3{-1, 3, 0.5}));
    EXPECT_EQ(cfg.ris_sides, (std::vector<std::size_t>{3, 5}));
    EXPECT_EQ(cfg.population.mean_users, 12.0);
    EXPECT_EQ(cfg.population.transmit_prob, 0.4);
    EXPECT_EQ(cfg.population.interferer_nx, 2u);
    EXPECT_EQ(cfg.realizations, 7u);
    EXPECT_EQ(cfg.seed, 99u);
    EXPECT_EQ(cfg.threads, 2u);
}

TEST(ParseConfig, InvalidValuesNameTheField)
{
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"frequency": -1}})"), "scene.frequency");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"absorption": -0.1}})"), "scene.absorption");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"frequency": "high"}})"), "scene.frequency");
    EXPECT_EQ(field_of(R"({"scenario": "power-comparison", "population": {"transmit_prob": 1.5}})"),
              "population.transmit_prob");
    EXPECT_EQ(field_of(R"({"scenario": "power-comparison", "population": {"r_min": 3, "r_max": 2}})"),
              "population.r_max");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "sweep": {"ris_sides": []}})"), "sweep.ris_sides");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "sweep": {"ris_sides": [4, -2]}})"), "sweep.ris_sides[1]");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"tx": {"position": [0, -1, 0]}}})"),
              "scene.tx.position");
    EXPECT_EQ(field_of(R"({"scenario": "moving-rx", "trajectory": {"waypoints": [[1, 1, 0]]}})"),
              "trajectory.waypoints");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "realizations": 0})"), "realizations");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"ris": {"up": [0, 1, 0]}}})"), "scene.ris.up");
}

TEST(ParseConfig, UnknownKeysRejected)
{
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "frequncy": 1})"), "frequncy");
    EXPECT_EQ(field_of(R"({"scenario": "ris-size-sweep", "scene": {"tx": {"gain": 3}}})"), "scene.tx.gain");
}

TEST(ParseConfig, MalformedJson)
{
    EXPECT_THROW(parse_config_text("{\"scenario\": "), ParseError);
    EXPECT_THROW(parse_config_text("[1, 2"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/risint.json"), ConfigError);
}

TEST(ToJson, RoundTripIsIdentity)
{
    for (auto s : {Scenario::ris_size_sweep, Scenario::moving_rx, Scenario::interference_validation,
                   Scenario::power_comparison})
    {
        auto cfg = default_config(s);
        cfg.seed = 1234567890123ULL;
        cfg.absorption = 0.1 / 3.0;
        const auto j = to_json(cfg);
        const auto back = parse_config(j);
        EXPECT_EQ(to_json(back), j) << scenario_name(s);
        EXPECT_EQ(back.seed, cfg.seed);
        EXPECT_EQ(back.absorption, cfg.absorption);
    }
}

TEST(ToJson, RoundTripGivesSameResults)
{
    auto cfg = default_config(Scenario::ris_size_sweep);
    cfg.ris_sides = {2, 6};
    const auto back = parse_config_text(to_json(cfg).dump());
    EXPECT_EQ(run_experiment(cfg).csv(), run_experiment(back).csv());
}

TEST(LoadConfig, ReadsFile)
{
    const std::string path = ::testing::TempDir() + "risint_cfg.json";
    {
        std::ofstream out(path);
        out << R"({"scenario": "power-comparison", "sweep": {"ris_sides": [2]}})";
    }
    const auto cfg = load_config(path);
    EXPECT_EQ(cfg.scenario, Scenario::power_comparison);
    EXPECT_EQ(cfg.ris_sides.size(), 1u);
    std::remove(path.c_str());
}

TEST(FullScale, OnlyTouchesInterferenceValidation)
{
    auto cfg = default_config(Scenario::interference_validation);
    apply_full_scale(cfg);
    EXPECT_EQ(cfg.population.mean_users, 4000.0);
    EXPECT_EQ(cfg.realizations, 1000u);
    auto sweep = default_config(Scenario::ris_size_sweep);
    apply_full_scale(sweep);
    EXPECT_EQ(to_json(sweep), to_json(default_config(Scenario::ris_size_sweep)));
}
