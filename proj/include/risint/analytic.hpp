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

// Closed-form far-field link gains and first-moment interference of a Poisson
// field of interferers around a wall-mounted RIS.

#include "risint/errors.hpp"
#include "risint/geometry.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace risint
{
    // Received power together with the multiplicative factors that produced it.
    // received_power is the left-to-right product of the factors.
    struct LinkBudget
    {
        double received_power = 0.0;
        std::vector<std::pair<std::string, double>> gain_breakdown;

        LinkBudget() = default;

        explicit LinkBudget(std::vector<std::pair<std::string, double>> factors)
            : gain_breakdown(std::move(factors))
        {
            double p = 1.0;
            for (const auto &[name, value] : gain_breakdown)
                p *= value;
            received_power = p;
        }

        double factor(const std::string &name) const
        {
            for (const auto &[n, v] : gain_breakdown)
                if (n == name)
                    return v;
            throw InvalidArgument("LinkBudget: no factor named " + name);
        }

        operator double() const noexcept { return received_power; }
    };

    // Interferer population. Radii are measured from the RIS center over the
    // half-plane in front of the wall.
    struct StochasticPopulation
    {
        double density = 0.0;         // users per m^2
        double transmit_prob = 1.0;   // ALOHA activity
        double nonblocked_prob = 1.0; // LOS thinning
        double r_min = 0.1;
        double r_max = 10.0;
        bool oriented_at_ris = false;

        void validate() const
        {
            if (!(density >= 0.0) || !std::isfinite(density))
                throw InvalidArgument("StochasticPopulation: density must be >= 0");
            if (!(transmit_prob >= 0.0 && transmit_prob <= 1.0))
                throw InvalidArgument("StochasticPopulation: transmit probability outside [0, 1]");
            if (!(nonblocked_prob >= 0.0 && nonblocked_prob <= 1.0))
                throw InvalidArgument("StochasticPopulation: non-blocked probability outside [0, 1]");
            if (!(r_min > 0.0) || !(r_min < r_max) || !std::isfinite(r_max))
                throw InvalidBounds("StochasticPopulation: require 0 < r_min < r_max");
        }

        double activity() const noexcept { return transmit_prob * nonblocked_prob; }

        // Mean number of users in the half-annulus r_min..r_max.
        double mean_count() const noexcept { return density * 0.5 * pi * (r_max * r_max - r_min * r_min); }

        // Density from a mean count over the half-disk of radius r_max.
        static double density_from_mean_count(double mean_users, double r_max)
        {
            return mean_users / (0.5 * pi * r_max * r_max);
        }
    };

    namespace detail
    {
        inline void require_positive_distance(double r, const char *what)
        {
            if (!(r > 0.0) || !std::isfinite(r))
                throw NonPositiveDistance(std::string(what) + ": distance must be > 0");
        }
    }

    // Integral of exp(-kappa r) / r over [r_min, r_max].
    inline double attenuation_integral(double r_min, double r_max, double kappa)
    {
        if (!(r_min > 0.0) || !(r_min < r_max) || !std::isfinite(r_max))
            throw InvalidBounds("attenuation_integral: require 0 < r_min < r_max");
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw InvalidArgument("attenuation_integral: kappa must be >= 0");
        if (kappa == 0.0)
            return std::log(r_max / r_min);

        // Integrate in u = ln r, where the integrand exp(-kappa e^u) is smooth and bounded.
        const auto integrand = [kappa](double u) { return std::exp(-kappa * std::exp(u)); };
        double error = 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, std::log(r_min), std::log(r_max), 30, 1e-13, &error);
    }

    inline double spreading_factor(double r, double frequency)
    {
        const double a = speed_of_light / (4.0 * pi * r * frequency);
        return a * a;
    }

    // P G_tx G_rx c^2 exp(-kappa r) / (4 pi r f)^2
    inline LinkBudget los_link_gain(double r, const Scene &scene, double g_tx, double g_rx)
    {
        detail::require_positive_distance(r, "los_link_gain");
        return LinkBudget({{"tx_power", scene.tx_power()},
                           {"g_tx", g_tx},
                           {"g_rx", g_rx},
                           {"spreading", spreading_factor(r, scene.frequency())},
                           {"absorption", std::exp(-scene.absorption() * r)}});
    }

    // Interferer with unit expected gains; pass g_tx when the interferer is aimed at the receiver.
    inline LinkBudget los_interference_gain(double r, const Scene &scene, double g_tx = 1.0)
    {
        return los_link_gain(r, scene, g_tx, 1.0);
    }

    // Two-hop Tx -> RIS -> Rx gain with the RIS capture area a_ris and total RIS gain g_ris.
    inline LinkBudget ris_link_gain(double r1, double r2, const Scene &scene, double g_tx, double g_rx, double g_ris,
                                    double a_ris)
    {
        detail::require_positive_distance(r1, "ris_link_gain");
        detail::require_positive_distance(r2, "ris_link_gain");
        const double c = speed_of_light;
        const double f = scene.frequency();
        const double four_pi = 4.0 * pi;
        return LinkBudget({{"tx_power", scene.tx_power()},
                           {"g_tx", g_tx},
                           {"g_rx", g_rx},
                           {"g_ris", g_ris},
                           {"aperture", a_ris},
                           {"absorption", std::exp(-scene.absorption() * (r1 + r2))},
                           {"spreading", c * c / (four_pi * four_pi * four_pi * f * f * r1 * r1 * r2 * r2)}});
    }

    // Single interferer to RIS: A_RIS G_tx exp(-kappa r) / (4 pi r^2), without transmit power.
    inline LinkBudget interferer_to_ris_gain(double r, const Scene &scene, double a_ris, double g_tx = 1.0)
    {
        detail::require_positive_distance(r, "interferer_to_ris_gain");
        return LinkBudget({{"aperture", a_ris},
                           {"g_tx", g_tx},
                           {"absorption", std::exp(-scene.absorption() * r)},
                           {"spreading", 1.0 / (4.0 * pi * r * r)}});
    }

    // Mean direct interference at the receiver from the population.
    inline LinkBudget mean_los_interference(const StochasticPopulation &pop, const Scene &scene)
    {
        pop.validate();
        const double c = speed_of_light;
        const double f = scene.frequency();
        return LinkBudget({{"tx_power", scene.tx_power()},
                           {"prefactor", c * c / (8.0 * pi * f * f)},
                           {"transmit_prob", pop.transmit_prob},
                           {"nonblocked_prob", pop.nonblocked_prob},
                           {"density", pop.density},
                           {"attenuation_integral", attenuation_integral(pop.r_min, pop.r_max, scene.absorption())}});
    }

    // Mean interference power captured by the RIS. g_tx only applies when the
    // population beamforms toward the RIS.
    inline LinkBudget mean_ris_incident_interference(const StochasticPopulation &pop, double a_ris, double g_tx,
                                                     const Scene &scene)
    {
        pop.validate();
        return LinkBudget({{"tx_power", scene.tx_power()},
                           {"aperture", a_ris},
                           {"g_tx", pop.oriented_at_ris ? g_tx : 1.0},
                           {"prefactor", 0.25},
                           {"transmit_prob", pop.transmit_prob},
                           {"nonblocked_prob", pop.nonblocked_prob},
                           {"density", pop.density},
                           {"attenuation_integral", attenuation_integral(pop.r_min, pop.r_max, scene.absorption())}});
    }

    // Captured interference re-radiated toward the receiver: i_ris c^2 G_rx sqrt(G_RIS) / (4 pi r f)^2.
    inline LinkBudget mean_ris_relayed_interference(double i_ris, double g_rx, double g_ris, double r_ris_rx,
                                                    const Scene &scene)
    {
        detail::require_positive_distance(r_ris_rx, "mean_ris_relayed_interference");
        return LinkBudget({{"incident", i_ris},
                           {"g_rx", g_rx},
                           {"sqrt_g_ris", std::sqrt(g_ris)},
                           {"spreading", spreading_factor(r_ris_rx, scene.frequency())}});
    }
}
