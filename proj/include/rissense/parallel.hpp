// SPDX-License-Identifier: Apache-2.0
//
// rissense - RIS-aided FMCW radar simulation and scene depth estimation
// Copyright (C) 2026 The rissense authors
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

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rissense {

// Runs fn(i) for every i in [0, count) across `workers` threads (0 picks the
// hardware concurrency). Indices are handed out dynamically, so the result
// must not depend on which thread runs which index: fn may only write state
// that belongs to its own i. The first exception thrown by any fn is
// rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn)
{
    if (workers <= 0)
    {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc ? static_cast<int>(hc) : 1;
    }
    if (workers > static_cast<int>(count))
        workers = static_cast<int>(count);

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; i++)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;)
        {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load(std::memory_order_relaxed))
                return;
            try
            {
                fn(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; t++)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();

    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace rissense
