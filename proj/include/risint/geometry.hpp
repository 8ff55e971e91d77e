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

#include "risint/errors.hpp"
#include "risint/vec3.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace risint
{
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double pi = std::numbers::pi;

    inline double wavelength_of(double frequency) { return speed_of_light / frequency; }

    // Rectangular lattice of isotropic elements.
    //
    // Local frame: the horizontal axis is up x boresight, so (horizontal, up, boresight)
    // is right-handed. Elements are centered on the origin and stored row-major,
    // index = iy * n_x + ix, with ix along the horizontal axis and iy along up.
    class PlanarArray
    {
    public:
        PlanarArray(std::size_t n_x, std::size_t n_y, double spacing, Vec3 origin, Vec3 boresight, Vec3 up)
            : n_x_(n_x), n_y_(n_y), spacing_(spacing), origin_(origin)
        {
            if (n_x == 0 || n_y == 0)
                throw InvalidArgument("PlanarArray: element counts must be >= 1");
            if (!(spacing > 0.0) || !std::isfinite(spacing))
                throw InvalidArgument("PlanarArray: spacing must be > 0");
            boresight_ = normalized(boresight);
            up_ = normalized(up);
            if (norm(boresight_) == 0.0 || norm(up_) == 0.0)
                throw InvalidArgument("PlanarArray: boresight and up must be non-zero");
            if (std::abs(dot(boresight_, up_)) >= 1e-9)
                throw InvalidArgument("PlanarArray: boresight must be perpendicular to up");
            horizontal_ = normalized(cross(up_, boresight_));
        }

        // Lattice pitch of half a wavelength.
        static PlanarArray half_wavelength(std::size_t n_x, std::size_t n_y, double wavelength, Vec3 origin,
                                           Vec3 boresight, Vec3 up)
        {
            return PlanarArray(n_x, n_y, 0.5 * wavelength, origin, boresight, up);
        }

        std::size_t n_x() const noexcept { return n_x_; }
        std::size_t n_y() const noexcept { return n_y_; }
        std::size_t size() const noexcept { return n_x_ * n_y_; }
        double spacing() const noexcept { return spacing_; }
        const Vec3 &origin() const noexcept { return origin_; }
        const Vec3 &boresight() const noexcept { return boresight_; }
        const Vec3 &up() const noexcept { return up_; }
        const Vec3 &horizontal() const noexcept { return horizontal_; }

        // Far-field gain convention: G = N.
        double gain() const noexcept { return static_cast<double>(size()); }

        double width() const noexcept { return static_cast<double>(n_x_ - 1) * spacing_; }
        double height() const noexcept { return static_cast<double>(n_y_ - 1) * spacing_; }

        // Element position relative to the array origin.
        Vec3 element_offset(std::size_t ix, std::size_t iy) const noexcept
        {
            const double hx = (static_cast<double>(ix) - 0.5 * static_cast<double>(n_x_ - 1)) * spacing_;
            const double hy = (static_cast<double>(iy) - 0.5 * static_cast<double>(n_y_ - 1)) * spacing_;
            return horizontal_ * hx + up_ * hy;
        }

        Vec3 to_local(const Vec3 &direction) const noexcept
        {
            return {dot(direction, horizontal_), dot(direction, up_), dot(direction, boresight_)};
        }

        Vec3 to_world(const Vec3 &local) const noexcept
        {
            return horizontal_ * local.x + up_ * local.y + boresight_ * local.z;
        }

        PlanarArray moved_to(const Vec3 &origin) const
        {
            return PlanarArray(n_x_, n_y_, spacing_, origin, boresight_, up_);
        }

        // Keeps the lattice, re-aims the array. `up_hint` is projected onto the plane
        // normal to the new boresight; falls back to another axis when parallel.
        PlanarArray pointed(const Vec3 &boresight, const Vec3 &up_hint) const
        {
            const Vec3 b = normalized(boresight);
            Vec3 u = up_hint - b * dot(up_hint, b);
            if (norm(u) < 1e-6)
            {
                const Vec3 alt = std::abs(b.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
                u = alt - b * dot(alt, b);
            }
            return PlanarArray(n_x_, n_y_, spacing_, origin_, b, normalized(u));
        }

    private:
        std::size_t n_x_;
        std::size_t n_y_;
        double spacing_;
        Vec3 origin_;
        Vec3 boresight_;
        Vec3 up_;
        Vec3 horizontal_;
    };

    // Channel constants and the three desired-link nodes.
    class Scene
    {
    public:
        Scene(PlanarArray tx, PlanarArray rx, PlanarArray ris, double frequency, double absorption, double tx_power)
            : tx_(std::move(tx)), rx_(std::move(rx)), ris_(std::move(ris)), frequency_(frequency),
              absorption_(absorption), tx_power_(tx_power)
        {
            if (!(frequency > 0.0) || !std::isfinite(frequency))
                throw InvalidArgument("Scene: frequency must be > 0");
            if (!(absorption >= 0.0) || !std::isfinite(absorption))
                throw InvalidArgument("Scene: absorption coefficient must be >= 0");
            if (!(tx_power > 0.0) || !std::isfinite(tx_power))
                throw InvalidArgument("Scene: transmit power must be > 0");
        }

        const PlanarArray &tx() const noexcept { return tx_; }
        const PlanarArray &rx() const noexcept { return rx_; }
        const PlanarArray &ris() const noexcept { return ris_; }
        double frequency() const noexcept { return frequency_; }
        double absorption() const noexcept { return absorption_; }
        double tx_power() const noexcept { return tx_power_; }
        double wavelength() const noexcept { return speed_of_light / frequency_; }
        double wavenumber() const noexcept { return 2.0 * pi / wavelength(); }

        Scene with_rx(PlanarArray rx) const { return Scene(tx_, std::move(rx), ris_, frequency_, absorption_, tx_power_); }
        Scene with_ris(PlanarArray ris) const { return Scene(tx_, rx_, std::move(ris), frequency_, absorption_, tx_power_); }

    private:
        PlanarArray tx_;
        PlanarArray rx_;
        PlanarArray ris_;
        double frequency_;
        double absorption_;
        double tx_power_;
    };

    // Unit direction expressed in an array's local frame (x horizontal, y up, z boresight).
    struct LocalDirection
    {
        Vec3 local;

        // Angle in the array plane from the horizontal axis.
        double azimuth() const { return std::atan2(local.y, local.x); }
        // Angle from the array plane toward boresight.
        double elevation() const { return std::asin(std::clamp(local.z, -1.0, 1.0)); }
    };

    struct RayPath
    {
        double length;
        LocalDirection departure; // toward b, in the frame of a
        LocalDirection arrival;   // toward a, in the frame of b
    };

    // Characteristic dimension D: the longer side of the lattice.
    inline double characteristic_dimension(const PlanarArray &array)
    {
        return std::max(array.width(), array.height());
    }

    // 2 D^2 / lambda.
    inline double near_field_radius(const PlanarArray &array, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw InvalidArgument("near_field_radius: wavelength must be > 0");
        const double d = characteristic_dimension(array);
        return 2.0 * d * d / wavelength;
    }

    // D^2 / lambda, the distance inside which far-field formulas lose accuracy.
    inline double breakdown_distance(const PlanarArray &array, double wavelength)
    {
        return 0.5 * near_field_radius(array, wavelength);
    }

    // Capture area (n_x - 1) d x (n_y - 1) d.
    inline double aperture_area(const PlanarArray &array) { return array.width() * array.height(); }

    inline std::vector<Vec3> element_positions(const PlanarArray &array)
    {
        std::vector<Vec3> out;
        out.reserve(array.size());
        for (std::size_t iy = 0; iy < array.n_y(); ++iy)
            for (std::size_t ix = 0; ix < array.n_x(); ++ix)
                out.push_back(array.origin() + array.element_offset(ix, iy));
        return out;
    }

    inline RayPath path_between(const Vec3 &a, const Vec3 &b, const PlanarArray &frame_a, const PlanarArray &frame_b)
    {
        const Vec3 delta = b - a;
        const double length = norm(delta);
        if (length == 0.0)
            throw ZeroLengthPath("path_between: endpoints coincide");
        const Vec3 u = delta / length;
        return {length, {frame_a.to_local(u)}, {frame_b.to_local(-u)}};
    }
}
