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
#pragma once

// Experiment configuration: defaults per scenario, JSON ingestion with strict key
// checking, and validation that names the offending field.

#include "risint/errors.hpp"
#include "risint/vec3.hpp"

#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace risint
{
    enum class Scenario
    {
        ris_size_sweep,
        moving_rx,
        interference_validation,
        power_comparison,
    };

    inline std::string_view scenario_name(Scenario s)
    {
        switch (s)
        {
        case Scenario::ris_size_sweep:
            return "ris-size-sweep";
        case Scenario::moving_rx:
            return "moving-rx";
        case Scenario::interference_validation:
            return "interference-validation";
        case Scenario::power_comparison:
        default:
            return "power-comparison";
        }
    }

    inline std::optional<Scenario> parse_scenario(std::string_view name)
    {
        for (auto s : {Scenario::ris_size_sweep, Scenario::moving_rx, Scenario::interference_validation,
                       Scenario::power_comparison})
            if (scenario_name(s) == name)
                return s;
        return std::nullopt;
    }

    // Tx or Rx node. The physical array always faces the RIS.
    struct NodeConfig
    {
        std::size_t nx = 4;
        std::size_t ny = 4;
        Vec3 position;
    };

    struct RisConfig
    {
        std::size_t nx = 64; // overridden per row by sweeps
        std::size_t ny = 64;
        Vec3 position{0.0, 0.0, 0.0};
        Vec3 boresight{0.0, 1.0, 0.0};
        Vec3 up{0.0, 0.0, 1.0};
    };

    struct PopulationConfig
    {
        double mean_users = 200.0; // over the half-disk of radius r_max
        double r_min = 0.1;
        double r_max = 2.0;
        double transmit_prob = 1.0;
        double nonblocked_prob = 1.0;
        std::size_t interferer_nx = 4;
        std::size_t interferer_ny = 4;
        double height = 0.0;
    };

    struct TrajectoryConfig
    {
        std::vector<Vec3> waypoints;
        std::size_t samples = 25;
    };

    struct ExperimentConfig
    {
        Scenario scenario = Scenario::ris_size_sweep;
        double frequency = 140e9; // Hz
        double absorption = 0.0;  // 1/m
        double tx_power = 1.0;    // W
        NodeConfig tx;
        NodeConfig rx;
        RisConfig ris;
        std::vector<std::size_t> ris_sides;
        TrajectoryConfig trajectory;
        PopulationConfig population;
        std::size_t realizations = 500;
        std::uint64_t seed = 1;
        std::string output;
        unsigned threads = 0;
    };

    // Defaults reproduce the reference geometries at desk scale.
    inline ExperimentConfig default_config(Scenario scenario)
    {
        ExperimentConfig cfg;
        cfg.scenario = scenario;
        cfg.tx = {4, 4, {-2.0, 2.0, 0.0}};
        cfg.rx = {4, 4, {2.0, 2.0, 0.0}};
        switch (scenario)
        {
        case Scenario::ris_size_sweep:
            cfg.ris_sides = {2, 4, 8, 16, 32, 48, 52, 64, 80, 100, 128, 160, 200};
            break;
        case Scenario::moving_rx:
            cfg.tx = {16, 16, {-6.0, 6.0, 0.0}};
            cfg.rx = {32, 32, {1.0, 6.0, 0.0}};
            cfg.ris.nx = 64;
            cfg.ris.ny = 64;
            cfg.trajectory.waypoints = {{1.0, 6.0, 0.0}, {1.0, 1.0, 0.0}, {6.0, 1.0, 0.0}};
            cfg.trajectory.samples = 25;
            break;
        case Scenario::interference_validation:
            cfg.ris_sides = {4, 8, 16};
            cfg.population.mean_users = 200.0;
            cfg.population.r_max = 2.0;
            cfg.realizations = 500;
            break;
        case Scenario::power_comparison:
            cfg.ris_sides = {2, 4, 8, 16, 32, 64};
            cfg.population.mean_users = 10.0;
            cfg.population.r_max = 10.0;
            break;
        }
        return cfg;
    }

    // Opt into the full-size ensembles of the reference study.
    inline void apply_full_scale(ExperimentConfig &cfg)
    {
        if (cfg.scenario == Scenario::interference_validation)
        {
            cfg.population.mean_users = 4000.0;
            cfg.realizations = 1000;
        }
    }

    namespace detail
    {
        using nlohmann::json;

        inline std::string join(const std::string &prefix, const std::string &key)
        {
            return prefix.empty() ? key : prefix + "." + key;
        }

        inline void reject_unknown(const json &obj, const std::string &path, std::initializer_list<std::string_view> known)
        {
            if (!obj.is_object())
                throw ValidationError(path.empty() ? "<root>" : path, "expected an object");
            for (const auto &item : obj.items())
            {
                bool ok = false;
                for (auto k : known)
                    ok = ok || item.key() == k;
                if (!ok)
                    throw ValidationError(join(path, item.key()), "unknown key");
            }
        }

        inline double get_number(const json &v, const std::string &path)
        {
            if (!v.is_number())
                throw ValidationError(path, "expected a number");
            return v.get<double>();
        }

        inline std::size_t get_count(const json &v, const std::string &path)
        {
            if (!v.is_number_integer() && !v.is_number_unsigned())
                throw ValidationError(path, "expected a non-negative integer");
            if (v.is_number_integer() && v.get<std::int64_t>() < 0)
                throw ValidationError(path, "expected a non-negative integer");
            return v.get<std::size_t>();
        }

        inline Vec3 get_vec3(const json &v, const std::string &path)
        {
            if (!v.is_array() || v.size() != 3)
                throw ValidationError(path, "expected [x, y, z]");
            return {get_number(v[0], path + "[0]"), get_number(v[1], path + "[1]"), get_number(v[2], path + "[2]")};
        }

        inline void get_shape(const json &v, const std::string &path, std::size_t &nx, std::size_t &ny)
        {
            if (!v.is_array() || v.size() != 2)
                throw ValidationError(path, "expected [n_x, n_y]");
            nx = get_count(v[0], path + "[0]");
            ny = get_count(v[1], path + "[1]");
        }

        inline json to_json(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }

        inline void read_node(const json &j, const std::string &path, NodeConfig &node)
        {
            reject_unknown(j, path, {"elements", "position"});
            if (j.contains("elements"))
                get_shape(j["elements"], join(path, "elements"), node.nx, node.ny);
            if (j.contains("position"))
                node.position = get_vec3(j["position"], join(path, "position"));
        }

        inline void require(bool ok, const std::string &path, const std::string &what)
        {
            if (!ok)
                throw ValidationError(path, what);
        }

        inline bool finite(const Vec3 &v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }
    }

    // Range checks; the error names the field with its dotted path.
    inline void validate(const ExperimentConfig &cfg)
    {
        using detail::require;
        require(std::isfinite(cfg.frequency) && cfg.frequency > 0.0, "scene.frequency", "must be > 0");
        require(std::isfinite(cfg.absorption) && cfg.absorption >= 0.0, "scene.absorption", "must be >= 0");
        require(std::isfinite(cfg.tx_power) && cfg.tx_power > 0.0, "scene.tx_power", "must be > 0");
        require(cfg.tx.nx >= 1 && cfg.tx.ny >= 1, "scene.tx.elements", "must be >= 1");
        require(cfg.rx.nx >= 1 && cfg.rx.ny >= 1, "scene.rx.elements", "must be >= 1");
        require(cfg.ris.nx >= 1 && cfg.ris.ny >= 1, "scene.ris.elements", "must be >= 1");
        require(detail::finite(cfg.tx.position), "scene.tx.position", "must be finite");
        require(detail::finite(cfg.rx.position), "scene.rx.position", "must be finite");
        require(detail::finite(cfg.ris.position), "scene.ris.position", "must be finite");
        require(norm(cfg.ris.boresight) > 0.0, "scene.ris.boresight", "must be non-zero");
        require(norm(cfg.ris.up) > 0.0, "scene.ris.up", "must be non-zero");
        require(std::abs(dot(normalized(cfg.ris.boresight), normalized(cfg.ris.up))) < 1e-9, "scene.ris.up",
                "must be perpendicular to boresight");
        const Vec3 b = normalized(cfg.ris.boresight);
        require(dot(cfg.tx.position - cfg.ris.position, b) > 0.0, "scene.tx.position", "must be in front of the RIS");
        if (cfg.scenario != Scenario::moving_rx)
        {
            require(dot(cfg.rx.position - cfg.ris.position, b) > 0.0, "scene.rx.position",
                    "must be in front of the RIS");
            require(!cfg.ris_sides.empty(), "sweep.ris_sides", "must not be empty");
            for (std::size_t i = 0; i < cfg.ris_sides.size(); ++i)
                require(cfg.ris_sides[i] >= 1, "sweep.ris_sides[" + std::to_string(i) + "]", "must be >= 1");
        }
        else
        {
            require(cfg.trajectory.waypoints.size() >= 2, "trajectory.waypoints", "need at least 2 waypoints");
            require(cfg.trajectory.samples >= 2, "trajectory.samples", "must be >= 2");
            for (std::size_t i = 0; i < cfg.trajectory.waypoints.size(); ++i)
            {
                const std::string path = "trajectory.waypoints[" + std::to_string(i) + "]";
                require(detail::finite(cfg.trajectory.waypoints[i]), path, "must be finite");
                require(dot(cfg.trajectory.waypoints[i] - cfg.ris.position, b) > 0.0, path,
                        "must be in front of the RIS");
            }
        }
        const auto &p = cfg.population;
        require(std::isfinite(p.mean_users) && p.mean_users >= 0.0, "population.mean_users", "must be >= 0");
        require(std::isfinite(p.r_min) && p.r_min > 0.0, "population.r_min", "must be > 0");
        require(std::isfinite(p.r_max) && p.r_max > p.r_min, "population.r_max", "must exceed r_min");
        require(p.transmit_prob >= 0.0 && p.transmit_prob <= 1.0, "population.transmit_prob", "must be in [0, 1]");
        require(p.nonblocked_prob >= 0.0 && p.nonblocked_prob <= 1.0, "population.nonblocked_prob",
                "must be in [0, 1]");
        require(p.interferer_nx >= 1 && p.interferer_ny >= 1, "population.interferer_elements", "must be >= 1");
        require(std::isfinite(p.height), "population.height", "must be finite");
        require(cfg.realizations >= 1, "realizations", "must be >= 1");
    }

    // Builds the effective configuration from a JSON document. Missing keys take
    // the scenario defaults; unknown keys are rejected. `fallback` supplies the
    // scenario when the document omits it.
    inline ExperimentConfig parse_config(const nlohmann::json &doc, std::optional<Scenario> fallback = std::nullopt)
    {
        using namespace detail;
        reject_unknown(doc, "", {"scenario", "scene", "sweep", "trajectory", "population", "realizations", "seed",
                                 "output", "threads"});

        std::optional<Scenario> scenario = fallback;
        if (doc.contains("scenario"))
        {
            if (!doc["scenario"].is_string())
                throw ValidationError("scenario", "expected a string");
            scenario = parse_scenario(doc["scenario"].get<std::string>());
            if (!scenario)
                throw ValidationError("scenario", "unknown scenario '" + doc["scenario"].get<std::string>() + "'");
            if (fallback && *fallback != *scenario)
                throw ValidationError("scenario", "config is for '" + std::string(scenario_name(*scenario)) +
                                                      "' but '" + std::string(scenario_name(*fallback)) +
                                                      "' was requested");
        }
        if (!scenario)
            throw ValidationError("scenario", "missing");

        ExperimentConfig cfg = default_config(*scenario);

        if (doc.contains("scene"))
        {
            const auto &s = doc["scene"];
            reject_unknown(s, "scene", {"frequency", "absorption", "tx_power", "tx", "rx", "ris"});
            if (s.contains("frequency"))
                cfg.frequency = get_number(s["frequency"], "scene.frequency");
            if (s.contains("absorption"))
                cfg.absorption = get_number(s["absorption"], "scene.absorption");
            if (s.contains("tx_power"))
                cfg.tx_power = get_number(s["tx_power"], "scene.tx_power");
            if (s.contains("tx"))
                read_node(s["tx"], "scene.tx", cfg.tx);
            if (s.contains("rx"))
                read_node(s["rx"], "scene.rx", cfg.rx);
            if (s.contains("ris"))
            {
                const auto &r = s["ris"];
                reject_unknown(r, "scene.ris", {"elements", "position", "boresight", "up"});
                if (r.contains("elements"))
                    get_shape(r["elements"], "scene.ris.elements", cfg.ris.nx, cfg.ris.ny);
                if (r.contains("position"))
                    cfg.ris.position = get_vec3(r["position"], "scene.ris.position");
                if (r.contains("boresight"))
                    cfg.ris.boresight = get_vec3(r["boresight"], "scene.ris.boresight");
                if (r.contains("up"))
                    cfg.ris.up = get_vec3(r["up"], "scene.ris.up");
            }
        }
        if (doc.contains("sweep"))
        {
            const auto &s = doc["sweep"];
            reject_unknown(s, "sweep", {"ris_sides"});
            if (s.contains("ris_sides"))
            {
                if (!s["ris_sides"].is_array())
                    throw ValidationError("sweep.ris_sides", "expected a list of integers");
                cfg.ris_sides.clear();
                for (std::size_t i = 0; i < s["ris_sides"].size(); ++i)
                    cfg.ris_sides.push_back(get_count(s["ris_sides"][i], "sweep.ris_sides[" + std::to_string(i) + "]"));
            }
        }
        if (doc.contains("trajectory"))
        {
            const auto &t = doc["trajectory"];
            reject_unknown(t, "trajectory", {"waypoints", "samples"});
            if (t.contains("waypoints"))
            {
                if (!t["waypoints"].is_array())
                    throw ValidationError("trajectory.waypoints", "expected a list of [x, y, z]");
                cfg.trajectory.waypoints.clear();
                for (std::size_t i = 0; i < t["waypoints"].size(); ++i)
                    cfg.trajectory.waypoints.push_back(
                        get_vec3(t["waypoints"][i], "trajectory.waypoints[" + std::to_string(i) + "]"));
            }
            if (t.contains("samples"))
                cfg.trajectory.samples = get_count(t["samples"], "trajectory.samples");
        }
        if (doc.contains("population"))
        {
            const auto &p = doc["population"];
            reject_unknown(p, "population", {"mean_users", "r_min", "r_max", "transmit_prob", "nonblocked_prob",
                                             "interferer_elements", "height"});
            auto &pc = cfg.population;
            if (p.contains("mean_users"))
                pc.mean_users = get_number(p["mean_users"], "population.mean_users");
            if (p.contains("r_min"))
                pc.r_min = get_number(p["r_min"], "population.r_min");
            if (p.contains("r_max"))
                pc.r_max = get_number(p["r_max"], "population.r_max");
            if (p.contains("transmit_prob"))
                pc.transmit_prob = get_number(p["transmit_prob"], "population.transmit_prob");
            if (p.contains("nonblocked_prob"))
                pc.nonblocked_prob = get_number(p["nonblocked_prob"], "population.nonblocked_prob");
            if (p.contains("interferer_elements"))
                get_shape(p["interferer_elements"], "population.interferer_elements", pc.interferer_nx,
                          pc.interferer_ny);
            if (p.contains("height"))
                pc.height = get_number(p["height"], "population.height");
        }
        if (doc.contains("realizations"))
            cfg.realizations = get_count(doc["realizations"], "realizations");
        if (doc.contains("seed"))
            cfg.seed = get_count(doc["seed"], "seed");
        if (doc.contains("output"))
        {
            if (!doc["output"].is_string())
                throw ValidationError("output", "expected a string");
            cfg.output = doc["output"].get<std::string>();
        }
        if (doc.contains("threads"))
            cfg.threads = static_cast<unsigned>(get_count(doc["threads"], "threads"));

        validate(cfg);
        return cfg;
    }

    inline ExperimentConfig parse_config_text(const std::string &text, std::optional<Scenario> fallback = std::nullopt)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ParseError(std::string("config: ") + e.what());
        }
        return parse_config(doc, fallback);
    }

    inline ExperimentConfig load_config(const std::string &path, std::optional<Scenario> fallback = std::nullopt)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_config_text(buffer.str(), fallback);
    }

    // Effective configuration with every default spelled out; parse_config(to_json(c)) == c.
    inline nlohmann::json to_json(const ExperimentConfig &cfg)
    {
        using nlohmann::json;
        using detail::to_json;
        json waypoints = json::array();
        for (const auto &w : cfg.trajectory.waypoints)
            waypoints.push_back(to_json(w));
        const auto &p = cfg.population;
        return json{
            {"scenario", std::string(scenario_name(cfg.scenario))},
            {"scene",
             {{"frequency", cfg.frequency},
              {"absorption", cfg.absorption},
              {"tx_power", cfg.tx_power},
              {"tx", {{"elements", {cfg.tx.nx, cfg.tx.ny}}, {"position", to_json(cfg.tx.position)}}},
              {"rx", {{"elements", {cfg.rx.nx, cfg.rx.ny}}, {"position", to_json(cfg.rx.position)}}},
              {"ris",
               {{"elements", {cfg.ris.nx, cfg.ris.ny}},
                {"position", to_json(cfg.ris.position)},
                {"boresight", to_json(cfg.ris.boresight)},
                {"up", to_json(cfg.ris.up)}}}}},
            {"sweep", {{"ris_sides", cfg.ris_sides}}},
            {"trajectory", {{"waypoints", waypoints}, {"samples", cfg.trajectory.samples}}},
            {"population",
             {{"mean_users", p.mean_users},
              {"r_min", p.r_min},
              {"r_max", p.r_max},
              {"transmit_prob", p.transmit_prob},
              {"nonblocked_prob", p.nonblocked_prob},
              {"interferer_elements", {p.interferer_nx, p.interferer_ny}},
              {"height", p.height}}},
            {"realizations", cfg.realizations},
            {"seed", cfg.seed},
            {"output", cfg.output},
            {"threads", cfg.threads}};
    }
}
