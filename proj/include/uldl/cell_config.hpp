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

#include <compare>
#include <cstdint>
#include <string>

namespace uldl {

// Antenna and user counts of the uplink cell (alpha) and the downlink cell (beta).
struct CellConfig {
    std::int64_t m1 = 1; // antennas at BS alpha (uplink receiver)
    std::int64_t m2 = 1; // antennas at BS beta (downlink transmitter)
    std::int64_t n1 = 1; // single-antenna users in cell alpha
    std::int64_t n2 = 1; // single-antenna users in cell beta

    auto operator<=>(const CellConfig &) const = default;

    // Throws std::invalid_argument unless every field is >= 1.
    void validate() const;

    std::string to_string() const;
};

inline CellConfig make_config(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2)
{
    CellConfig cfg{m1, m2, n1, n2};
    cfg.validate();
    return cfg;
}

} // namespace uldl
