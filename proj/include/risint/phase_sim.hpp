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

// Element-level coherent field simulation. Every element of every array has a
// physical position and the response between any two elements uses the exact
// element-to-element distance, so the results hold in the near field of the
// arrays as long as each single element sees the other in its far field.
//
// Propagation convention: a wave travelling a distance r picks up exp(-j k r).
// A beam toward unit direction u therefore uses weights exp(-j k q.u), with q the
// element offset from the array origin.

#include "risint/analytic.hpp"
#include "risint/errors.hpp"
#include "risint/geometry.hpp"
#include "risint/parallel.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace risint
{
    using cplx = std::complex<double>;

    // One unit-magnitude phasor per element, indexed like element_positions().
    class PhaseProfile
    {
    public:
        PhaseProfile(std::size_t n_x, std::size_t n_y, std::vector<cplx> phasors)
            : n_x_(n_x), n_y_(n_y), phasors_(std::move(phasors))
        {
            if (phasors_.size() != n_x_ * n_y_)
                throw InvalidArgument("PhaseProfile: phasor count does not match the lattice");
            for (const auto &p : phasors_)
                if (std::abs(std::abs(p) - 1.0) > 1e-12)
                    throw InvalidArgument("PhaseProfile: phasors must have unit magnitude");
        }

        static PhaseProfile uniform(const PlanarArray &array)
        {
            return PhaseProfile(array.n_x(), array.n_y(), std::vector<cplx>(array.size(), cplx(1.0, 0.0)));
        }

        std::size_t n_x() const noexcept { return n_x_; }
        std::size_t n_y() const noexcept { return n_y_; }
        std::size_t size() const noexcept { return phasors_.size(); }
        const cplx &operator[](std::size_t i) const noexcept { return phasors_[i]; }
        const std::vector<cplx> &phasors() const noexcept { return phasors_; }

        // Same profile multiplied by a global unit phasor.
        PhaseProfile rotated(double phase) const
        {
            std::vector<cplx> out(phasors_);
            const cplx g = std::polar(1.0, phase);
            for (auto &p : out)
                p *= g;
            return PhaseProfile(n_x_, n_y_, std::move(out));
        }

        bool matches(const PlanarArray &array) const noexcept
        {
            return n_x_ == array.n_x() && n_y_ == array.n_y();
        }

    private:
        std::size_t n_x_;
        std::size_t n_y_;
        std::vector<cplx> phasors_;
    };

    // Complex amplitude (sqrt(W)) per RIS element, RIS phases already applied.
    struct IncidentField
    {
        std::size_t n_x = 0;
        std::size_t n_y = 0;
        std::vector<cplx> amplitudes;

        double total_power() const
        {
            double p = 0.0;
            for (const auto &a : amplitudes)
                p += std::norm(a);
            return p;
        }
    };

    namespace detail
    {
        inline void require_match(const PhaseProfile &phases, const PlanarArray &array, const char *what)
        {
            if (!phases.matches(array))
                throw InvalidArgument(std::string(what) + ": phase profile does not match array dimensions");
        }

        // exp(-kappa r / 2) exp(-j k r) / r
        inline cplx propagate(double r, double wavenumber, double half_kappa)
        {
            if (r == 0.0)
                throw DegenerateGeometry("coincident elements");
            const double amplitude = (half_kappa == 0.0 ? 1.0 : std::exp(-half_kappa * r)) / r;
            return std::polar(amplitude, -wavenumber * r);
        }

        // sum_j weights[j] * propagate(|target - sources[j]|)
        inline cplx coherent_sum(const Vec3 &target, const std::vector<Vec3> &sources, const PhaseProfile &weights,
                                 double wavenumber, double half_kappa)
        {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < sources.size(); ++j)
                acc += weights[j] * propagate(distance(target, sources[j]), wavenumber, half_kappa);
            return acc;
        }
    }

    // Far-field beam toward target_dir (world frame).
    inline PhaseProfile steering_phases(const PlanarArray &array, const Vec3 &target_dir, double wavelength)
    {
        if (std::abs(norm(target_dir) - 1.0) > 1e-9)
            throw InvalidArgument("steering_phases: target direction must be a unit vector");
        const double k = 2.0 * pi / wavelength;
        std::vector<cplx> out;
        out.reserve(array.size());
        for (std::size_t iy = 0; iy < array.n_y(); ++iy)
            for (std::size_t ix = 0; ix < array.n_x(); ++ix)
                out.push_back(std::polar(1.0, -k * dot(array.element_offset(ix, iy), target_dir)));
        return PhaseProfile(array.n_x(), array.n_y(), std::move(out));
    }

    // Beam from `array` toward the point `target`, aimed from the array origin.
    inline PhaseProfile steering_phases_to(const PlanarArray &array, const Vec3 &target, double wavelength)
    {
        const Vec3 delta = target - array.origin();
        if (norm(delta) == 0.0)
            throw DegenerateGeometry("steering_phases_to: target at the array origin");
        return steering_phases(array, normalized(delta), wavelength);
    }

    // Far-field coherent sum sum_e w_e exp(+j k q_e.u) toward unit direction u.
    inline cplx array_factor(const PlanarArray &array, const PhaseProfile &weights, const Vec3 &u, double wavelength)
    {
        detail::require_match(weights, array, "array_factor");
        const double k = 2.0 * pi / wavelength;
        cplx acc(0.0, 0.0);
        std::size_t e = 0;
        for (std::size_t iy = 0; iy < array.n_y(); ++iy)
            for (std::size_t ix = 0; ix < array.n_x(); ++ix, ++e)
                acc += weights[e] * std::polar(1.0, k * dot(array.element_offset(ix, iy), u));
        return acc;
    }

    // Far-field RIS configuration that reflects the plane wave from tx_pos toward rx_pos.
    inline PhaseProfile ris_reflection_phases(const PlanarArray &ris, const Vec3 &tx_pos, const Vec3 &rx_pos,
                                              double wavelength)
    {
        const Vec3 to_tx = tx_pos - ris.origin();
        const Vec3 to_rx = rx_pos - ris.origin();
        constexpr double eps = 1e-12;
        if (std::abs(dot(to_tx, ris.boresight())) <= eps || std::abs(dot(to_rx, ris.boresight())) <= eps)
            throw DegenerateGeometry("ris_reflection_phases: node lies on the RIS plane");
        const Vec3 sum = normalized(to_tx) + normalized(to_rx);
        const double k = 2.0 * pi / wavelength;
        std::vector<cplx> out;
        out.reserve(ris.size());
        for (std::size_t iy = 0; iy < ris.n_y(); ++iy)
            for (std::size_t ix = 0; ix < ris.n_x(); ++ix)
                out.push_back(std::polar(1.0, -k * dot(ris.element_offset(ix, iy), sum)));
        return PhaseProfile(ris.n_x(), ris.n_y(), std::move(out));
    }

    // Amplitude at each RIS element from one transmitter. Each Tx element radiates
    // sqrt(P / N_tx) so an aligned array has gain N_tx; each RIS element captures
    // the area A_RIS / N_RIS.
    inline IncidentField incident_field_at_ris(const PlanarArray &tx, const PhaseProfile &tx_phases,
                                               const PlanarArray &ris, const PhaseProfile &ris_phases,
                                               const Scene &scene, Execution exec = {})
    {
        detail::require_match(tx_phases, tx, "incident_field_at_ris");
        detail::require_match(ris_phases, ris, "incident_field_at_ris");

        const auto tx_pos = element_positions(tx);
        const auto ris_pos = element_positions(ris);
        const double k = scene.wavenumber();
        const double half_kappa = 0.5 * scene.absorption();
        const double element_area = aperture_area(ris) / static_cast<double>(ris.size());
        const double scale = std::sqrt(scene.tx_power() * element_area / (4.0 * pi)) /
                             std::sqrt(static_cast<double>(tx.size()));

        IncidentField field{ris.n_x(), ris.n_y(), std::vector<cplx>(ris.size())};
        parallel_for(ris.size(), exec, [&](std::size_t e) {
            field.amplitudes[e] = scale * ris_phases[e] * detail::coherent_sum(ris_pos[e], tx_pos, tx_phases, k, half_kappa);
        });
        return field;
    }

    // Power collected by the receiver array from the re-radiated RIS field.
    inline double received_power_via_ris(const IncidentField &field, const PlanarArray &ris, const PlanarArray &rx,
                                         const PhaseProfile &rx_phases, const Scene &scene, Execution exec = {})
    {
        if (field.n_x != ris.n_x() || field.n_y != ris.n_y() || field.amplitudes.size() != ris.size())
            throw InvalidArgument("received_power_via_ris: field does not match the RIS lattice");
        detail::require_match(rx_phases, rx, "received_power_via_ris");

        const auto ris_pos = element_positions(ris);
        const auto rx_pos = element_positions(rx);
        const double k = scene.wavenumber();
        const double half_kappa = 0.5 * scene.absorption();
        const double hop = speed_of_light / (4.0 * pi * scene.frequency());

        std::vector<cplx> partial(ris.size());
        parallel_for(ris.size(), exec, [&](std::size_t e) {
            partial[e] = field.amplitudes[e] * detail::coherent_sum(ris_pos[e], rx_pos, rx_phases, k, half_kappa);
        });
        cplx total(0.0, 0.0);
        for (const auto &p : partial)
            total += p;
        return std::norm(hop * total) / static_cast<double>(rx.size());
    }

    // Direct Tx -> Rx power with the same per-element normalization as the RIS path.
    inline double received_power_direct(const PlanarArray &tx, const PhaseProfile &tx_phases, const PlanarArray &rx,
                                        const PhaseProfile &rx_phases, const Scene &scene, Execution exec = {})
    {
        detail::require_match(tx_phases, tx, "received_power_direct");
        detail::require_match(rx_phases, rx, "received_power_direct");

        const auto tx_pos = element_positions(tx);
        const auto rx_pos = element_positions(rx);
        const double k = scene.wavenumber();
        const double half_kappa = 0.5 * scene.absorption();

        std::vector<cplx> partial(tx.size());
        parallel_for(tx.size(), exec, [&](std::size_t e) {
            partial[e] = tx_phases[e] * detail::coherent_sum(tx_pos[e], rx_pos, rx_phases, k, half_kappa);
        });
        cplx total(0.0, 0.0);
        for (const auto &p : partial)
            total += p;
        const double hop = speed_of_light / (4.0 * pi * scene.frequency());
        const double amplitude2 = scene.tx_power() / static_cast<double>(tx.size());
        return amplitude2 * std::norm(hop * total) / static_cast<double>(rx.size());
    }

    // Desired link through the RIS with the Tx and Rx aimed at the RIS and the RIS
    // configured between them.
    inline double desired_power_via_ris(const Scene &scene, Execution exec = {})
    {
        const double lambda = scene.wavelength();
        const auto tx_phases = steering_phases_to(scene.tx(), scene.ris().origin(), lambda);
        const auto rx_phases = steering_phases_to(scene.rx(), scene.ris().origin(), lambda);
        const auto ris_phases = ris_reflection_phases(scene.ris(), scene.tx().origin(), scene.rx().origin(), lambda);
        const auto field = incident_field_at_ris(scene.tx(), tx_phases, scene.ris(), ris_phases, scene, exec);
        return received_power_via_ris(field, scene.ris(), scene.rx(), rx_phases, scene, exec);
    }

    // Desired direct link with both beams aimed at each other.
    inline double desired_power_direct(const Scene &scene, Execution exec = {})
    {
        const double lambda = scene.wavelength();
        const auto tx_phases = steering_phases_to(scene.tx(), scene.rx().origin(), lambda);
        const auto rx_phases = steering_phases_to(scene.rx(), scene.tx().origin(), lambda);
        return received_power_direct(scene.tx(), tx_phases, scene.rx(), rx_phases, scene, exec);
    }

    // Closed-form counterparts of the two functions above (G = N everywhere).
    inline LinkBudget analytic_power_via_ris(const Scene &scene)
    {
        return ris_link_gain(distance(scene.tx().origin(), scene.ris().origin()),
                             distance(scene.ris().origin(), scene.rx().origin()), scene, scene.tx().gain(),
                             scene.rx().gain(), scene.ris().gain(), aperture_area(scene.ris()));
    }

    inline LinkBudget analytic_power_direct(const Scene &scene)
    {
        return los_link_gain(distance(scene.tx().origin(), scene.rx().origin()), scene, scene.tx().gain(),
                             scene.rx().gain());
    }
}
