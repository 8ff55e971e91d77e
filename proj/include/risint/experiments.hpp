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

// The four canned experiments. Each produces a ResultTable of SI values (watts,
// meters); flags are stored as 0/1.

#include "risint/analytic.hpp"
#include "risint/config.hpp"
#include "risint/geometry.hpp"
#include "risint/monte_carlo.hpp"
#include "risint/phase_sim.hpp"
#include "risint/random.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef RISINT_VERSION
#define RISINT_VERSION "0.0.0"
#endif

namespace risint
{
    inline constexpr const char *tool_version = RISINT_VERSION;

    inline double to_db(double watts_ratio) { return 10.0 * std::log10(watts_ratio); }

    class ResultTable
    {
    public:
        explicit ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

        void add_row(std::vector<double> row)
        {
            if (row.size() != columns_.size())
                throw InvalidArgument("ResultTable: row width does not match the header");
            rows_.push_back(std::move(row));
        }

        const std::vector<std::string> &columns() const noexcept { return columns_; }
        const std::vector<std::vector<double>> &rows() const noexcept { return rows_; }
        std::size_t size() const noexcept { return rows_.size(); }

        std::size_t column(const std::string &name) const
        {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                if (columns_[i] == name)
                    return i;
            throw InvalidArgument("ResultTable: no column named " + name);
        }

        double at(std::size_t row, const std::string &name) const { return rows_.at(row).at(column(name)); }

        nlohmann::json metadata;

        // Shortest round-trip representation, so rows are byte-stable.
        static std::string format(double v)
        {
            if (std::isnan(v))
                return "nan";
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            return std::string(buf, end);
        }

        void write_csv(std::ostream &out) const
        {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out << (i ? "," : "") << columns_[i];
            out << '\n';
            for (const auto &row : rows_)
            {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << format(row[i]);
                out << '\n';
            }
        }

        std::string csv() const
        {
            std::ostringstream s;
            write_csv(s);
            return s.str();
        }

    private:
        std::vector<std::string> columns_;
        std::vector<std::vector<double>> rows_;
    };

    namespace detail
    {
        inline PlanarArray node_array(const NodeConfig &node, const Vec3 &position, const RisConfig &ris, double lambda)
        {
            const Vec3 up = normalized(ris.up);
            return PlanarArray::half_wavelength(node.nx, node.ny, lambda, position, ris.boresight, up)
                .pointed(normalized(ris.position - position), up);
        }

        inline PlanarArray ris_array(const RisConfig &ris, std::size_t nx, std::size_t ny, double lambda)
        {
            return PlanarArray::half_wavelength(nx, ny, lambda, ris.position, ris.boresight, ris.up);
        }

        inline Scene build_scene(const ExperimentConfig &cfg, std::size_t ris_nx, std::size_t ris_ny,
                                 const Vec3 &rx_position)
        {
            const double lambda = wavelength_of(cfg.frequency);
            return Scene(node_array(cfg.tx, cfg.tx.position, cfg.ris, lambda),
                         node_array(cfg.rx, rx_position, cfg.ris, lambda), ris_array(cfg.ris, ris_nx, ris_ny, lambda),
                         cfg.frequency, cfg.absorption, cfg.tx_power);
        }

        inline StochasticPopulation population_of(const ExperimentConfig &cfg, bool oriented)
        {
            const auto &p = cfg.population;
            StochasticPopulation pop;
            pop.density = StochasticPopulation::density_from_mean_count(p.mean_users, p.r_max);
            pop.transmit_prob = p.transmit_prob;
            pop.nonblocked_prob = p.nonblocked_prob;
            pop.r_min = p.r_min;
            pop.r_max = p.r_max;
            pop.oriented_at_ris = oriented;
            return pop;
        }

        // Closed-form interference relayed by the RIS to the receiver.
        inline double analytic_relayed(const ExperimentConfig &cfg, const Scene &scene, bool oriented)
        {
            const auto pop = population_of(cfg, oriented);
            const double g_interferer =
                static_cast<double>(cfg.population.interferer_nx * cfg.population.interferer_ny);
            const double incident = mean_ris_incident_interference(pop, aperture_area(scene.ris()), g_interferer, scene);
            return mean_ris_relayed_interference(incident, scene.rx().gain(), scene.ris().gain(),
                                                 distance(scene.ris().origin(), scene.rx().origin()), scene);
        }

        inline double db_error(double simulated, double analytic)
        {
            if (simulated > 0.0 && analytic > 0.0)
                return to_db(simulated / analytic);
            return std::numeric_limits<double>::quiet_NaN();
        }

        // `samples` points evenly spaced in arc length along the polyline.
        inline std::vector<Vec3> sample_polyline(const std::vector<Vec3> &waypoints, std::size_t samples)
        {
            std::vector<double> cumulative{0.0};
            for (std::size_t i = 1; i < waypoints.size(); ++i)
                cumulative.push_back(cumulative.back() + distance(waypoints[i - 1], waypoints[i]));
            const double total = cumulative.back();
            std::vector<Vec3> out;
            out.reserve(samples);
            std::size_t seg = 1;
            for (std::size_t s = 0; s < samples; ++s)
            {
                const double at = total * static_cast<double>(s) / static_cast<double>(samples - 1);
                while (seg + 1 < waypoints.size() && at > cumulative[seg])
                    ++seg;
                const double len = cumulative[seg] - cumulative[seg - 1];
                const double t = len > 0.0 ? (at - cumulative[seg - 1]) / len : 0.0;
                out.push_back(waypoints[seg - 1] + (waypoints[seg] - waypoints[seg - 1]) * std::min(1.0, t));
            }
            return out;
        }

        inline void stamp(ResultTable &table, const ExperimentConfig &cfg,
                          std::chrono::steady_clock::time_point started)
        {
            table.metadata = {
                {"config", to_json(cfg)},
                {"seed", cfg.seed},
                {"tool_version", tool_version},
                {"columns", table.columns()},
                {"wall_time_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
        }
    }

    // Desired RIS link against RIS size with the nodes fixed.
    inline ResultTable run_ris_size_sweep(const ExperimentConfig &cfg)
    {
        validate(cfg);
        const auto started = std::chrono::steady_clock::now();
        const Execution exec{cfg.threads};
        ResultTable table({"ris_side", "ris_elements", "analytic_ris_w", "simulated_ris_w", "error_db",
                           "los_analytic_w", "los_simulated_w", "near_field_radius_m", "breakdown_distance_m",
                           "inside_breakdown"});
        for (std::size_t side : cfg.ris_sides)
        {
            const Scene scene = detail::build_scene(cfg, side, side, cfg.rx.position);
            const double analytic = analytic_power_via_ris(scene);
            const double simulated = desired_power_via_ris(scene, exec);
            const double los_analytic = analytic_power_direct(scene);
            const double los_simulated = desired_power_direct(scene, exec);
            const double lambda = scene.wavelength();
            const double breakdown = breakdown_distance(scene.ris(), lambda);
            const double nearest = std::min(distance(scene.tx().origin(), scene.ris().origin()),
                                            distance(scene.rx().origin(), scene.ris().origin()));
            table.add_row({static_cast<double>(side), static_cast<double>(scene.ris().size()), analytic, simulated,
                           detail::db_error(simulated, analytic), los_analytic, los_simulated,
                           near_field_radius(scene.ris(), lambda), breakdown, breakdown > nearest ? 1.0 : 0.0});
        }
        detail::stamp(table, cfg, started);
        return table;
    }

    // Receiver moving along a polyline; the RIS is re-aimed at every position.
    inline ResultTable run_moving_rx(const ExperimentConfig &cfg)
    {
        validate(cfg);
        const auto started = std::chrono::steady_clock::now();
        const Execution exec{cfg.threads};
        ResultTable table({"waypoint", "x_m", "y_m", "z_m", "distance_to_ris_m", "los_analytic_w", "los_simulated_w",
                           "analytic_ris_w", "simulated_ris_w", "error_db", "inside_breakdown"});
        const auto points = detail::sample_polyline(cfg.trajectory.waypoints, cfg.trajectory.samples);
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const Scene scene = detail::build_scene(cfg, cfg.ris.nx, cfg.ris.ny, points[i]);
            const double dist = distance(points[i], scene.ris().origin());
            const double analytic = analytic_power_via_ris(scene);
            const double simulated = desired_power_via_ris(scene, exec);
            const double breakdown = breakdown_distance(scene.ris(), scene.wavelength());
            table.add_row({static_cast<double>(i), points[i].x, points[i].y, points[i].z, dist,
                           analytic_power_direct(scene), desired_power_direct(scene, exec), analytic, simulated,
                           detail::db_error(simulated, analytic), dist < breakdown ? 1.0 : 0.0});
        }
        detail::stamp(table, cfg, started);
        return table;
    }

    // Monte Carlo interference via the RIS for both orientation modes against the closed form.
    inline ResultTable run_interference_validation(const ExperimentConfig &cfg)
    {
        validate(cfg);
        const auto started = std::chrono::steady_clock::now();
        const Execution exec{cfg.threads};
        ResultTable table({"ris_side", "analytic_toward_w", "mc_toward_mean_w", "mc_toward_ci95_w", "toward_converged",
                           "toward_error_db", "analytic_random_w", "mc_random_mean_w", "mc_random_ci95_w",
                           "random_converged", "random_error_db", "mean_interferers"});
        for (std::size_t row = 0; row < cfg.ris_sides.size(); ++row)
        {
            const std::size_t side = cfg.ris_sides[row];
            const Scene scene = detail::build_scene(cfg, side, side, cfg.rx.position);

            EnsembleSpec spec;
            spec.population = detail::population_of(cfg, true);
            spec.target = Target::rx_via_ris;
            spec.n_realizations = cfg.realizations;
            spec.drop = {cfg.population.interferer_nx, cfg.population.interferer_ny, cfg.population.height};

            spec.orientation = Orientation::toward_ris;
            spec.master_seed = substream(cfg.seed, 2 * row);
            const auto toward = run_ensemble(scene, spec, exec);

            spec.orientation = Orientation::random;
            spec.population.oriented_at_ris = false;
            spec.master_seed = substream(cfg.seed, 2 * row + 1);
            const auto random = run_ensemble(scene, spec, exec);

            const double analytic_toward = detail::analytic_relayed(cfg, scene, true);
            const double analytic_random = detail::analytic_relayed(cfg, scene, false);
            table.add_row({static_cast<double>(side), analytic_toward, toward.mean_power, toward.ci95_halfwidth,
                           toward.converged() ? 1.0 : 0.0, detail::db_error(toward.mean_power, analytic_toward),
                           analytic_random, random.mean_power, random.ci95_halfwidth, random.converged() ? 1.0 : 0.0,
                           detail::db_error(random.mean_power, analytic_random), spec.population.mean_count()});
        }
        detail::stamp(table, cfg, started);
        return table;
    }

    // Closed-form desired and interfering powers against RIS size.
    inline ResultTable run_power_comparison(const ExperimentConfig &cfg)
    {
        validate(cfg);
        const auto started = std::chrono::steady_clock::now();
        ResultTable table({"ris_side", "desired_ris_w", "desired_los_w", "relayed_toward_w", "relayed_random_w",
                           "los_interference_w"});
        for (std::size_t side : cfg.ris_sides)
        {
            const Scene scene = detail::build_scene(cfg, side, side, cfg.rx.position);
            table.add_row({static_cast<double>(side), analytic_power_via_ris(scene), analytic_power_direct(scene),
                           detail::analytic_relayed(cfg, scene, true), detail::analytic_relayed(cfg, scene, false),
                           mean_los_interference(detail::population_of(cfg, false), scene)});
        }
        detail::stamp(table, cfg, started);
        return table;
    }

    inline ResultTable run_experiment(const ExperimentConfig &cfg)
    {
        switch (cfg.scenario)
        {
        case Scenario::ris_size_sweep:
            return run_ris_size_sweep(cfg);
        case Scenario::moving_rx:
            return run_moving_rx(cfg);
        case Scenario::interference_validation:
            return run_interference_validation(cfg);
        case Scenario::power_comparison:
        default:
            return run_power_comparison(cfg);
        }
    }
}
