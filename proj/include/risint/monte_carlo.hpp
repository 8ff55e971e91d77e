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

// Poisson drops of interferers in front of a wall-mounted RIS and seeded ensembles
// over the phase simulator.
//
// Interferers are mutually incoherent: powers, not fields, add across nodes.
// Within a node the array response is coherent.

#include "risint/analytic.hpp"
#include "risint/geometry.hpp"
#include "risint/parallel.hpp"
#include "risint/phase_sim.hpp"
#include "risint/random.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace risint
{
    enum class Orientation
    {
        random,
        toward_ris,
    };

    enum class Target
    {
        rx_via_ris,
        rx_direct,
        ris_incident,
    };

    inline std::string_view to_string(Orientation o)
    {
        return o == Orientation::random ? "random" : "toward_ris";
    }

    struct Interferer
    {
        Vec3 position;
        PlanarArray array;
        Vec3 beam_dir;
        bool active = true;
    };

    struct InterfererField
    {
        std::vector<Interferer> nodes;
        std::uint64_t realization_seed = 0;

        std::size_t active_count() const
        {
            std::size_t n = 0;
            for (const auto &node : nodes)
                n += node.active ? 1 : 0;
            return n;
        }
    };

    struct DropOptions
    {
        std::size_t interferer_nx = 4;
        std::size_t interferer_ny = 4;
        // Offset of the drop plane along the RIS up axis.
        double height = 0.0;
    };

    // Poisson number of users, uniform over the half-annulus r_min..r_max in the
    // horizontal plane in front of the RIS, each active with probability p_T p_N.
    // Every node starts with its array facing the RIS.
    inline InterfererField sample_interferers(const StochasticPopulation &pop, const Scene &scene, std::uint64_t seed,
                                              const DropOptions &opts = {})
    {
        pop.validate();
        const PlanarArray &ris = scene.ris();
        CounterRng rng(seed);

        InterfererField field;
        field.realization_seed = seed;

        const double mean = pop.mean_count();
        if (!(mean > 0.0))
            return field;
        const auto count = std::poisson_distribution<std::uint64_t>(mean)(rng);

        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::bernoulli_distribution keep(pop.activity());
        const double r2_min = pop.r_min * pop.r_min;
        const double r2_span = pop.r_max * pop.r_max - r2_min;
        const PlanarArray prototype =
            PlanarArray::half_wavelength(opts.interferer_nx, opts.interferer_ny, scene.wavelength(), ris.origin(),
                                         -ris.boresight(), ris.up());

        field.nodes.reserve(count);
        for (std::uint64_t n = 0; n < count; ++n)
        {
            const double r = std::sqrt(r2_min + unit(rng) * r2_span);
            const double phi = pi * unit(rng);
            const bool active = keep(rng);
            const Vec3 position = ris.origin() + ris.horizontal() * (r * std::cos(phi)) +
                                  ris.boresight() * (r * std::sin(phi)) + ris.up() * opts.height;
            const Vec3 beam = normalized(ris.origin() - position);
            field.nodes.push_back({position, prototype.moved_to(position).pointed(beam, ris.up()), beam, active});
        }
        return field;
    }

    // Beam directions either straight at the RIS center or uniform on the sphere.
    // The node's array is re-aimed so its boresight is the beam direction.
    inline InterfererField assign_orientations(InterfererField field, Orientation mode, const PlanarArray &ris,
                                               std::uint64_t seed)
    {
        CounterRng rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (auto &node : field.nodes)
        {
            Vec3 beam;
            if (mode == Orientation::toward_ris)
            {
                beam = normalized(ris.origin() - node.position);
            }
            else
            {
                const double z = 2.0 * unit(rng) - 1.0;
                const double az = 2.0 * pi * unit(rng);
                const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
                beam = ris.horizontal() * (rho * std::cos(az)) + ris.boresight() * (rho * std::sin(az)) + ris.up() * z;
                beam = normalized(beam);
            }
            node.beam_dir = beam;
            node.array = node.array.pointed(beam, ris.up());
        }
        return field;
    }

    // Phases of the desired link shared by every interferer evaluation.
    struct DesiredLinkSetup
    {
        PhaseProfile ris_phases;
        PhaseProfile rx_phases; // receiver aimed at the RIS

        static DesiredLinkSetup from(const Scene &scene)
        {
            const double lambda = scene.wavelength();
            return {ris_reflection_phases(scene.ris(), scene.tx().origin(), scene.rx().origin(), lambda),
                    steering_phases_to(scene.rx(), scene.ris().origin(), lambda)};
        }
    };

    inline double interferer_power(const Scene &scene, const DesiredLinkSetup &setup, const Interferer &node,
                                   Target target)
    {
        const auto tx_phases = steering_phases(node.array, node.beam_dir, scene.wavelength());
        switch (target)
        {
        case Target::rx_direct:
            return received_power_direct(node.array, tx_phases, scene.rx(), setup.rx_phases, scene);
        case Target::ris_incident:
            return incident_field_at_ris(node.array, tx_phases, scene.ris(), setup.ris_phases, scene).total_power();
        case Target::rx_via_ris:
        default:
        {
            const auto field = incident_field_at_ris(node.array, tx_phases, scene.ris(), setup.ris_phases, scene);
            return received_power_via_ris(field, scene.ris(), scene.rx(), setup.rx_phases, scene);
        }
        }
    }

    // Aggregate power over the active set, summed in node order.
    inline double simulate_realization(const Scene &scene, const DesiredLinkSetup &setup, const InterfererField &field,
                                       Target target)
    {
        double total = 0.0;
        for (const auto &node : field.nodes)
            if (node.active)
                total += interferer_power(scene, setup, node, target);
        return total;
    }

    inline double simulate_realization(const Scene &scene, const InterfererField &field, Target target)
    {
        return simulate_realization(scene, DesiredLinkSetup::from(scene), field, target);
    }

    struct EnsembleStats
    {
        double mean_power = 0.0;
        double std_power = 0.0;
        double ci95_halfwidth = 0.0;
        std::size_t n_realizations = 0;
        std::vector<double> per_realization_powers;

        // Half-width of the 95% interval above this fraction of the mean counts as not converged.
        static constexpr double convergence_tolerance = 0.2;

        bool converged() const noexcept
        {
            if (mean_power == 0.0)
                return true;
            return ci95_halfwidth <= convergence_tolerance * mean_power;
        }

        static EnsembleStats from_samples(std::vector<double> samples)
        {
            EnsembleStats s;
            s.n_realizations = samples.size();
            if (samples.empty())
                return s;
            const double n = static_cast<double>(samples.size());
            double sum = 0.0;
            for (double v : samples)
                sum += v;
            s.mean_power = sum / n;
            if (samples.size() > 1)
            {
                double ss = 0.0;
                for (double v : samples)
                    ss += (v - s.mean_power) * (v - s.mean_power);
                s.std_power = std::sqrt(ss / (n - 1.0));
                s.ci95_halfwidth = 1.959963984540054 * s.std_power / std::sqrt(n);
            }
            s.per_realization_powers = std::move(samples);
            return s;
        }
    };

    struct EnsembleSpec
    {
        StochasticPopulation population;
        Orientation orientation = Orientation::toward_ris;
        Target target = Target::rx_via_ris;
        std::size_t n_realizations = 500;
        std::uint64_t master_seed = 1;
        DropOptions drop;
    };

    // Realization i draws positions from substream(substream(seed, i), 0) and
    // orientations from substream(substream(seed, i), 1), so the output does not
    // depend on the number of threads.
    inline EnsembleStats run_ensemble(const Scene &scene, const EnsembleSpec &spec, Execution exec = {})
    {
        if (spec.n_realizations == 0)
            throw InvalidArgument("run_ensemble: need at least one realization");
        spec.population.validate();

        const auto setup = DesiredLinkSetup::from(scene);
        std::vector<double> powers(spec.n_realizations);
        parallel_for(spec.n_realizations, exec, [&](std::size_t i) {
            const std::uint64_t key = substream(spec.master_seed, i);
            auto field = sample_interferers(spec.population, scene, substream(key, 0), spec.drop);
            field = assign_orientations(std::move(field), spec.orientation, scene.ris(), substream(key, 1));
            powers[i] = simulate_realization(scene, setup, field, spec.target);
        });
        return EnsembleStats::from_samples(std::move(powers));
    }
}
