/*
   Copyright 2026 The qrlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdlib>
#include <cstdint>
#include <thread>
#include <vector>

namespace qr {

/// Resolves a worker count: an explicit request wins, then the QR_WORKERS
/// environment variable, then hardware concurrency.
inline unsigned resolve_workers(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QR_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(worker_index, begin, end) on contiguous slices of [0, count).
/// Workers own disjoint slices; callers merge per-worker results in worker
/// order so the combined result does not depend on scheduling.
template <class Fn>
void parallel_slices(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (count == 0) return;
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (w < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace qr
