// Copyright 2026 The kerrgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KERRGKP_CLI_PARALLEL_H
#define KERRGKP_CLI_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kerrgkp::cli {

/// Evaluates fn(0..n-1) on up to `jobs` threads. Results keep index order.
/// The exception from the lowest failing index is rethrown.
template <typename Fn>
auto parallel_map(size_t n, int jobs, Fn fn) -> std::vector<decltype(fn(size_t{}))> {
    using T = decltype(fn(size_t{}));
    std::vector<T> out(n);
    std::atomic<size_t> next{0};
    std::mutex mu;
    size_t failed_at = n;
    std::exception_ptr error;
    auto worker = [&] {
        for (size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    error = std::current_exception();
                }
            }
        }
    };
    size_t threads = std::min<size_t>(std::max(jobs, 1), std::max<size_t>(n, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

}  // namespace kerrgkp::cli

#endif
