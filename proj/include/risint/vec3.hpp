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

#include <cmath>

namespace risint
{
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        constexpr Vec3 &operator+=(const Vec3 &o)
        {
            x += o.x;
            y += o.y;
            z += o.z;
            return *this;
        }
        constexpr Vec3 &operator-=(const Vec3 &o)
        {
            x -= o.x;
            y -= o.y;
            z -= o.z;
            return *this;
        }
        constexpr Vec3 &operator*=(double s)
        {
            x *= s;
            y *= s;
            z *= s;
            return *this;
        }

        friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
        friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
        friend constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
        friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
        friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
        friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
        friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
    };

    constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

    inline double distance(const Vec3 &a, const Vec3 &b) { return norm(b - a); }

    // Zero vector maps to zero.
    inline Vec3 normalized(const Vec3 &a)
    {
        const double n = norm(a);
        return n > 0.0 ? a / n : Vec3{};
    }
}
