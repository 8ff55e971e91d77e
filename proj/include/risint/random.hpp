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

#include <cstdint>
#include <limits>

namespace risint
{
    // SplitMix64 finalizer.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Counter-based generator: the n-th output is mix64(key + n * gamma), so any
    // draw is a pure function of (key, n). Satisfies UniformRandomBitGenerator.
    class CounterRng
    {
    public:
        using result_type = std::uint64_t;

        explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

        static constexpr result_type min() noexcept { return 0; }
        static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

        constexpr result_type operator()() noexcept
        {
            ++counter_;
            return mix64(key_ + counter_ * gamma);
        }

        constexpr std::uint64_t key() const noexcept { return key_; }
        constexpr std::uint64_t counter() const noexcept { return counter_; }

    private:
        static constexpr std::uint64_t gamma = 0x9e3779b97f4a7c15ULL;
        std::uint64_t key_;
        std::uint64_t counter_ = 0;
    };

    // Independent key for substream `index` of `parent`.
    constexpr std::uint64_t substream(std::uint64_t parent, std::uint64_t index) noexcept
    {
        return mix64(parent ^ mix64(index + 0x632be59bd9b4e019ULL));
    }
}
