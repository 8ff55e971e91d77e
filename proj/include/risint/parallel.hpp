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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace risint
{
    // Number of worker threads; 0 selects the hardware concurrency.
    struct Execution
    {
        unsigned threads = 1;

        unsigned resolved() const noexcept
        {
            if (threads != 0)
                return threads;
            return std::max(1u, std::thread::hardware_concurrency());
        }
    };

    // Calls body(i) for i in [0, n) using contiguous chunks. Results must be written
    // to per-index slots; reductions happen afterwards in index order.
    template <class Body>
    void parallel_for(std::size_t n, Execution exec, Body &&body)
    {
        const std::size_t workers = std::min<std::size_t>(exec.resolved(), n);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                body(i);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
            {
                const std::size_t begin = n * w / workers;
                const std::size_t end = n * (w + 1) / workers;
                pool.emplace_back([&, begin, end] {
                    try
                    {
                        for (std::size_t i = begin; i < end; ++i)
                            body(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                });
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }
}
