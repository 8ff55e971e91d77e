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
#include "risint/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace risint;

namespace
{
    const PlanarArray unit_array(1, 1, 1e-3, {}, {0, 1, 0}, {0, 0, 1});

    Scene scene(double kappa = 0.0, double power = 1.0, double f = 140e9)
    {
        return Scene(unit_array, unit_array, unit_array, f, kappa, power);
    }

    // Composite Simpson rule with n (even) panels; independent of the library path.
    double simpson(double a, double b, double kappa, std::size_t n)
    {
        const double h = (b - a) / static_cast<double>(n);
        const auto f = [kappa](double r) { return std::exp(-kappa * r) / r; };
        double odd = 0.0;
        double even = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            (i % 2 ? odd : even) += f(a + h * static_cast<double>(i));
        return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
    }

    double budget_product(const LinkBudget &b)
    {
        double p = 1.0;
        for (const auto &[name, v] : b.gain_breakdown)
            p *= v;
        return p;
    }

    StochasticPopulation population(double density = 1.0)
    {
        StochasticPopulation pop;
        pop.density = density;
        pop.r_min = 0.1;
        pop.r_max = 10.0;
        return pop;
    }
}

TEST(LosLinkGain, FriisReference)
{
    // (c / (4 pi r f))^2 at r = 4 m.
    const double expected = std::pow(speed_of_light / (4.0 * pi * 4.0 * 140e9), 2);
    const double p = los_link_gain(4.0, scene(), 1.0, 1.0);
    EXPECT_NEAR(p / expected, 1.0, 1e-14);
    EXPECT_NEAR(p, 1.82e-9, 0.01e-9);
    EXPECT_NEAR(10.0 * std::log10(p), -87.4, 0.05);
}

TEST(LosLinkGain, InverseSquareAndAbsorption)
{
    EXPECT_NEAR(los_link_gain(8.0, scene(), 1, 1) / los_link_gain(4.0, scene(), 1, 1), 0.25, 1e-15);
    const double kappa = 0.3;
    EXPECT_NEAR(los_link_gain(3.0, scene(kappa), 2, 5) / (los_link_gain(3.0, scene(), 2, 5) * std::exp(-kappa * 3.0)),
                1.0, 1e-14);
    for (double r : {0.5, 1.0, 7.5})
        EXPECT_NEAR(los_link_gain(r, scene(kappa), 1, 1) / los_link_gain(2 * r, scene(kappa), 1, 1),
                    4.0 * std::exp(kappa * r), 1e-12 * 4.0 * std::exp(kappa * r));
    EXPECT_THROW(los_link_gain(0.0, scene(), 1, 1), NonPositiveDistance);
    EXPECT_THROW(los_link_gain(-1.0, scene(), 1, 1), NonPositiveDistance);
}

TEST(LosInterferenceGain, UnitGainsAndOrientedVariant)
{
    const double expected = std::pow(speed_of_light / (4.0 * pi * 140e9), 2);
    EXPECT_NEAR(los_interference_gain(1.0, scene()) / expected, 1.0, 1e-14);
    EXPECT_NEAR(los_interference_gain(1.0, scene()), 2.91e-8, 0.01e-8);
    EXPECT_DOUBLE_EQ(los_interference_gain(2.5, scene()).received_power,
                     los_link_gain(2.5, scene(), 1.0, 1.0).received_power);
    EXPECT_NEAR(los_interference_gain(2.5, scene(), 16.0) / los_interference_gain(2.5, scene()), 16.0, 1e-13);
}

TEST(RisLinkGain, DegenerateAndScaling)
{
    EXPECT_EQ(ris_link_gain(1.0, 2.0, scene(), 16, 16, 1, 0.0).received_power, 0.0);
    const double base = ris_link_gain(1.3, 2.1, scene(), 16, 64, 256, 1e-3);
    EXPECT_NEAR(ris_link_gain(2.6, 4.2, scene(), 16, 64, 256, 1e-3) / base, 1.0 / 16.0, 1e-15);
    EXPECT_THROW(ris_link_gain(0.0, 1.0, scene(), 1, 1, 1, 1), NonPositiveDistance);
    EXPECT_THROW(ris_link_gain(1.0, -1.0, scene(), 1, 1, 1, 1), NonPositiveDistance);
}

TEST(RisLinkGain, SymmetricInHops)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> r(0.1, 50.0);
    for (int i = 0; i < 100; ++i)
    {
        const double a = r(gen);
        const double b = r(gen);
        EXPECT_DOUBLE_EQ(ris_link_gain(a, b, scene(0.01), 4, 9, 100, 2e-3).received_power,
                  ris_link_gain(b, a, scene(0.01), 4, 9, 100, 2e-3).received_power);
    }
}

TEST(AttenuationIntegral, ClosedFormWithoutAbsorption)
{
    EXPECT_NEAR(attenuation_integral(1.0, std::exp(1.0), 0.0), 1.0, 1e-15);
    EXPECT_NEAR(attenuation_integral(0.1, 10.0, 0.0), std::log(100.0), 1e-15);
    EXPECT_NEAR(attenuation_integral(0.1, 10.0, 0.0), 4.6052, 1e-4);
}

TEST(AttenuationIntegral, MatchesSimpsonOracle)
{
    const double oracle = simpson(1.0, 10.0, 0.01, 1000000);
    EXPECT_NEAR(attenuation_integral(1.0, 10.0, 0.01) / oracle, 1.0, 1e-10);
    for (double kappa : {1e-4, 0.05, 0.7, 3.0})
    {
        const double o = simpson(0.1, 10.0, kappa, 1000000);
        EXPECT_NEAR(attenuation_integral(0.1, 10.0, kappa) / o, 1.0, 1e-9) << kappa;
    }
}

TEST(AttenuationIntegral, Monotonicity)
{
    double previous = attenuation_integral(0.1, 10.0, 0.0);
    for (double kappa : {1e-3, 1e-2, 0.1, 0.5, 2.0})
    {
        const double v = attenuation_integral(0.1, 10.0, kappa);
        EXPECT_LT(v, previous);
        previous = v;
    }
    previous = 0.0;
    for (double r_max : {0.2, 0.5, 1.0, 5.0, 20.0})
    {
        const double v = attenuation_integral(0.1, r_max, 0.2);
        EXPECT_GT(v, previous);
        previous = v;
    }
}

TEST(AttenuationIntegral, InvalidBounds)
{
    EXPECT_THROW(attenuation_integral(0.0, 1.0, 0.0), InvalidBounds);
    EXPECT_THROW(attenuation_integral(2.0, 1.0, 0.0), InvalidBounds);
    EXPECT_THROW(attenuation_integral(1.0, 1.0, 0.1), InvalidBounds);
}

TEST(MeanLosInterference, ThinningAndLinearity)
{
    auto pop = population(0.05);
    const double base = mean_los_interference(pop, scene());
    EXPECT_GT(base, 0.0);

    auto doubled = pop;
    doubled.density *= 2.0;
    EXPECT_NEAR(mean_los_interference(doubled, scene()) / base, 2.0, 1e-14);

    auto silent = pop;
    silent.transmit_prob = 0.0;
    EXPECT_EQ(mean_los_interference(silent, scene()).received_power, 0.0);

    // Closed form with kappa = 0.
    const double c = speed_of_light;
    const double expected = c * c * 0.05 / (8.0 * pi * 140e9 * 140e9) * std::log(100.0);
    EXPECT_NEAR(base / expected, 1.0, 1e-14);

    pop.r_max = 0.05;
    EXPECT_THROW(mean_los_interference(pop, scene()), InvalidBounds);
}

TEST(MeanRisIncidentInterference, OrientationRatioAndAperture)
{
    auto pop = population(0.3);
    const double unoriented = mean_ris_incident_interference(pop, 4e-3, 16.0, scene());
    pop.oriented_at_ris = true;
    const double oriented = mean_ris_incident_interference(pop, 4e-3, 16.0, scene());
    EXPECT_NEAR(oriented / unoriented, 16.0, 1e-13);
    EXPECT_EQ(mean_ris_incident_interference(pop, 0.0, 16.0, scene()).received_power, 0.0);

    // Integrating the single-interferer gain over the half-disk reproduces the prefactor 1/4.
    const double expected = 1.0 * 4e-3 * 0.3 / 4.0 * std::log(100.0) * 16.0;
    EXPECT_NEAR(oriented / expected, 1.0, 1e-14);
}

TEST(MeanRisRelayedInterference, SqrtGainScaling)
{
    const double g1 = mean_ris_relayed_interference(1e-3, 16.0, 1.0, 2.83, scene());
    EXPECT_NEAR(g1 / (1e-3 * 16.0 * spreading_factor(2.83, 140e9)), 1.0, 1e-14);
    EXPECT_NEAR(mean_ris_relayed_interference(1e-3, 16.0, 4.0, 2.83, scene()) / g1, 2.0, 1e-14);
    EXPECT_THROW(mean_ris_relayed_interference(1e-3, 16.0, 4.0, 0.0, scene()), NonPositiveDistance);
}

TEST(MeanInterference, LinearInDensityAndProbabilities)
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int i = 0; i < 50; ++i)
    {
        auto pop = population(u(gen));
        pop.transmit_prob = u(gen);
        pop.nonblocked_prob = u(gen);
        pop.oriented_at_ris = i % 2 == 0;
        const double s = u(gen);
        const double los = mean_los_interference(pop, scene(0.05));
        const double ris = mean_ris_incident_interference(pop, 1e-3, 16.0, scene(0.05));

        for (int which = 0; which < 3; ++which)
        {
            auto scaled = pop;
            (which == 0 ? scaled.density : which == 1 ? scaled.transmit_prob : scaled.nonblocked_prob) *= s;
            EXPECT_NEAR(mean_los_interference(scaled, scene(0.05)) / los, s, 1e-13);
            EXPECT_NEAR(mean_ris_incident_interference(scaled, 1e-3, 16.0, scene(0.05)) / ris, s, 1e-13);
        }
    }
}

TEST(LinkBudget, FactorsMultiplyToPower)
{
    auto pop = population(0.2);
    pop.oriented_at_ris = true;
    const Scene s = scene(0.02, 2.0);
    for (const LinkBudget &b :
         {los_link_gain(3.3, s, 16, 64), los_interference_gain(1.2, s), ris_link_gain(2.0, 5.0, s, 16, 16, 1024, 3e-3),
          mean_los_interference(pop, s), mean_ris_incident_interference(pop, 3e-3, 16, s),
          mean_ris_relayed_interference(1e-4, 16, 256, 2.83, s), interferer_to_ris_gain(0.7, s, 3e-3, 16)})
    {
        EXPECT_NEAR(budget_product(b) / b.received_power, 1.0, 1e-12);
    }
    const auto b = los_link_gain(4.0, s, 16, 64);
    EXPECT_DOUBLE_EQ(b.factor("g_rx"), 64.0);
    EXPECT_THROW(b.factor("nope"), InvalidArgument);
}

TEST(StochasticPopulation, DensityFromMeanCount)
{
    const double density = StochasticPopulation::density_from_mean_count(10.0, 10.0);
    EXPECT_NEAR(density * 0.5 * pi * 100.0, 10.0, 1e-12);
    StochasticPopulation pop;
    pop.transmit_prob = 1.5;
    EXPECT_THROW(pop.validate(), InvalidArgument);
}
