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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uldl/cell_config.hpp"
#include "uldl/rational.hpp"

namespace uldl {

// Share of the grid [1, cap]^4 on which uplink-downlink operation strictly
// beats the conventional-operation upper bound.
struct GainScanResult {
    std::int64_t lambda_cap = 0;
    std::int64_t gain_count = 0;
    std::int64_t total = 0; // lambda_cap^4

    Rational fraction() const { return Rational(gain_count, total); }
    // Four decimals, rounded half-up.
    std::string rendered() const { return to_decimal_string(fraction(), 4); }
};

// `threads == 0` picks std::thread::hardware_concurrency(). The result does not
// depend on the thread count.
GainScanResult delta_gain(std::int64_t lambda_cap, unsigned threads = 0);

struct GainWitness {
    CellConfig cfg;
    Rational d_sigma;
    Rational d_upper;
};

// First `limit` strict-gain configs in lexicographic (m1, m2, n1, n2) order.
std::vector<GainWitness> gain_region(std::int64_t lambda_cap, std::size_t limit);

} // namespace uldl
