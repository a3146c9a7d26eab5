// SPDX-License-Identifier: Apache-2.0
//
// uldl-dof: degrees of freedom of uplink-downlink two-cell MIMO networks
// Copyright (C) 2026 The uldl-dof Authors
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

#include "uldl/gain_scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "uldl/dof_core.hpp"

namespace uldl {

namespace {

void check_cap(std::int64_t lambda_cap)
{
    if (lambda_cap < 1)
        throw std::invalid_argument("grid edge must be >= 1");
    if (lambda_cap > 1024)
        throw std::invalid_argument("grid edge must be <= 1024");
}

// Strict-gain count over the slab m1 in [first, last).
std::int64_t count_slab(std::int64_t lambda_cap, std::int64_t first, std::int64_t last)
{
    std::int64_t count = 0;
    for (std::int64_t m1 = first; m1 < last; ++m1)
        for (std::int64_t m2 = 1; m2 <= lambda_cap; ++m2)
            for (std::int64_t n1 = 1; n1 <= lambda_cap; ++n1)
                for (std::int64_t n2 = 1; n2 <= lambda_cap; ++n2) {
                    const CellConfig cfg{m1, m2, n1, n2};
                    if (sum_dof(cfg) > conventional_upper(cfg))
                        ++count;
                }
    return count;
}

} // namespace

GainScanResult delta_gain(std::int64_t lambda_cap, unsigned threads)
{
    check_cap(lambda_cap);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(threads, lambda_cap));

    // Each worker owns a contiguous range of m1 values; counts are summed in
    // worker order after all joins.
    std::vector<std::int64_t> partial(static_cast<size_t>(workers), 0);
    {
        std::vector<std::jthread> pool;
        for (std::int64_t w = 0; w < workers; ++w) {
            const std::int64_t first = 1 + w * lambda_cap / workers;
            const std::int64_t last = 1 + (w + 1) * lambda_cap / workers;
            pool.emplace_back([&partial, w, lambda_cap, first, last] {
                partial[static_cast<size_t>(w)] = count_slab(lambda_cap, first, last);
            });
        }
    }

    GainScanResult result;
    result.lambda_cap = lambda_cap;
    result.total = lambda_cap * lambda_cap * lambda_cap * lambda_cap;
    for (auto c : partial)
        result.gain_count += c;
    return result;
}

std::vector<GainWitness> gain_region(std::int64_t lambda_cap, std::size_t limit)
{
    check_cap(lambda_cap);
    std::vector<GainWitness> out;
    for (std::int64_t m1 = 1; m1 <= lambda_cap; ++m1)
        for (std::int64_t m2 = 1; m2 <= lambda_cap; ++m2)
            for (std::int64_t n1 = 1; n1 <= lambda_cap; ++n1)
                for (std::int64_t n2 = 1; n2 <= lambda_cap; ++n2) {
                    if (out.size() >= limit)
                        return out;
                    const CellConfig cfg{m1, m2, n1, n2};
                    const Rational d = sum_dof(cfg);
                    const Rational u = conventional_upper(cfg);
                    if (d > u)
                        out.push_back({cfg, d, u});
                }
    return out;
}

} // namespace uldl
