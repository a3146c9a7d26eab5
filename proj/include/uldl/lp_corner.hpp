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

#include <optional>
#include <string>
#include <vector>

#include "uldl/cell_config.hpp"
#include "uldl/rational.hpp"

namespace uldl {

/// Per-user stream fractions (lambda1 for cell alpha users, lambda2 for cell beta users).
struct StreamAllocation {
    Rational lambda1;
    Rational lambda2;

    bool operator==(const StreamAllocation &) const = default;
    // Lexicographic on (lambda1, lambda2).
    bool operator<(const StreamAllocation &o) const
    {
        return lambda1 < o.lambda1 || (lambda1 == o.lambda1 && lambda2 < o.lambda2);
    }
};

/// a*lambda1 + b*lambda2 <= c
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;
    std::string label;

    bool holds(const StreamAllocation &p) const { return a * p.lambda1 + b * p.lambda2 <= c; }
};

/// Constraint rows on top of the implicit box 0 <= lambda1, lambda2 <= 1.
class HalfPlaneSet {
  public:
    HalfPlaneSet() = default;
    explicit HalfPlaneSet(std::vector<HalfPlane> rows);

    // Throws std::invalid_argument when a == b == 0 (the row has no boundary line).
    void add(HalfPlane row);

    const std::vector<HalfPlane> &constraints() const { return rows_; }

    // Box bounds plus every constraint, exactly.
    bool contains(const StreamAllocation &p) const;

    // Label of the first violated row (box rows included), if any.
    std::optional<std::string> first_violation(const StreamAllocation &p) const;

    // Constraint rows followed by the four box rows.
    std::vector<HalfPlane> with_box() const;

  private:
    std::vector<HalfPlane> rows_;
};

/// Feasible pairwise intersections of all boundary lines (box included), sorted
/// lexicographically, without duplicates. Parallel pairs are skipped. Throws
/// std::domain_error if no corner is feasible.
std::vector<StreamAllocation> enumerate_corners(const HalfPlaneSet &hs);

struct LpSolution {
    Rational value;
    StreamAllocation argmax;
};

/// Maximizes w1*lambda1 + w2*lambda2 over the corners; ties go to the
/// lexicographically largest allocation.
LpSolution maximize_over_corners(const HalfPlaneSet &hs, const Rational &w1, const Rational &w2);

enum class Scheme {
    // uplink inter-cell alignment, downlink inter-cell and intra-cell nulling
    InterAndIntraNulling = 1,
    // uplink inter-cell alignment, downlink intra-cell nulling only
    IntraNullingOnly = 2,
};

int scheme_number(Scheme s);
Scheme scheme_from_number(int n); // throws std::invalid_argument unless n is 1 or 2

HalfPlaneSet scheme_constraints(Scheme scheme, const CellConfig &cfg);

/// max N1 l1 + N2 l2  s.t.  l1 + l2 <= 1, N1 l1 <= M1, N1 l1 + N2 l2 <= M2
LpSolution solve_scheme1(const CellConfig &cfg);

/// max N1 l1 + N2 l2  s.t.  l1 + l2 <= 1, N1 l1 + N2 l2 <= M1, N2 l2 <= M2
LpSolution solve_scheme2(const CellConfig &cfg);

LpSolution solve_scheme(Scheme scheme, const CellConfig &cfg);

/// Scheme-1 program with N1 replaced by L*N1 (L hotspots sharing the macro cell).
LpSolution solve_hotspot(std::int64_t hotspots, const CellConfig &cfg);

} // namespace uldl
