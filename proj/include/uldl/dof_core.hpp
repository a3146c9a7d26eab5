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

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "uldl/cell_config.hpp"
#include "uldl/rational.hpp"

namespace uldl {

/// Raised when two formulas that must agree do not. Never expected in
/// practice; it is the self-check behind the regime table.
class InconsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Sum DoF of the uplink-downlink two-cell network:
///   min{ (N1 N2 + min(M1,N1)(N1-N2)^+ + min(M2,N2)(N2-N1)^+) / max(N1,N2),
///        M1+N2, M2+N1, max(M1,M2), max(N1,N2) }.
Rational sum_dof(const CellConfig &cfg);

/// Two-user MIMO interference channel bound min{M1+N2, M2+N1, max(M1,M2), max(N1,N2)}.
Rational mimo_ic_upper(const CellConfig &cfg);

/// Best single active cell: max(min(M1,N1), min(M2,N2)).
Rational single_cell_lower(const CellConfig &cfg);

/// Upper bound for conventional operation (both cells uplink or both downlink),
/// min{M1+M2, N1+N2, max(M1,N2), max(M2,N1)}.
Rational conventional_upper(const CellConfig &cfg);

enum class Param { M1, M2, N1, N2 };

// Closed-form expressions appearing in the regime table.
enum class Formula {
    M1,
    M2,
    N1,
    N2,
    UplinkSkew,          // (N1 N2 + M1 (N1 - N2)) / N1
    DownlinkSkew,        // (N1 N2 + M2 (N2 - N1)) / N2
    MinM2UplinkSkew,     // min(M2, UplinkSkew)
    MinM1DownlinkSkew,   // min(M1, DownlinkSkew)
};

struct RegimeRow {
    int index = 0;                 // 1..24
    std::array<Param, 4> ordering; // ordering[0] <= ordering[1] <= ordering[2] <= ordering[3]
    Formula d1;                    // scheme-1 LP optimum
    Formula d2;                    // scheme-2 LP optimum
    Formula dmax;                  // max of the two

    bool applies(const CellConfig &cfg) const;
    std::string ordering_string() const;
};

/// The 24 regimes, in table order.
const std::array<RegimeRow, 24> &regime_table();

Rational evaluate(Formula f, const CellConfig &cfg);
std::string formula_name(Formula f);

/// All rows whose ordering the config satisfies, lowest index first. Never empty.
std::vector<RegimeRow> classify_regime(const CellConfig &cfg);

struct RegimeValues {
    Rational d1;
    Rational d2;
    Rational dmax;
    bool operator==(const RegimeValues &) const = default;
};

/// Closed forms of the first applicable row. Throws InconsistencyError if any
/// other applicable row evaluates differently.
RegimeValues regime_closed_forms(const CellConfig &cfg);

struct HotspotBounds {
    Rational conventional_upper;    // both tiers uplink or both downlink
    Rational uplink_downlink_lower; // micro cells uplink, macro cell downlink
};

/// Bounds for L hotspots, each a micro BS with m1 antennas serving n1 users,
/// inside a macro cell with m2 antennas and n2 outside users.
HotspotBounds hotspot_bounds(std::int64_t hotspots, const CellConfig &cfg);

} // namespace uldl
