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

#include "uldl/lp_corner.hpp"

#include <algorithm>
#include <stdexcept>

namespace uldl {

HalfPlaneSet::HalfPlaneSet(std::vector<HalfPlane> rows)
{
    for (auto &row : rows)
        add(std::move(row));
}

void HalfPlaneSet::add(HalfPlane row)
{
    if (row.a == 0 && row.b == 0)
        throw std::invalid_argument("degenerate constraint '" + row.label + "': both coefficients are zero");
    rows_.push_back(std::move(row));
}

std::vector<HalfPlane> HalfPlaneSet::with_box() const
{
    std::vector<HalfPlane> all = rows_;
    all.push_back({-1, 0, 0, "lambda1 >= 0"});
    all.push_back({1, 0, 1, "lambda1 <= 1"});
    all.push_back({0, -1, 0, "lambda2 >= 0"});
    all.push_back({0, 1, 1, "lambda2 <= 1"});
    return all;
}

std::optional<std::string> HalfPlaneSet::first_violation(const StreamAllocation &p) const
{
    for (const auto &row : with_box())
        if (!row.holds(p))
            return row.label;
    return std::nullopt;
}

bool HalfPlaneSet::contains(const StreamAllocation &p) const { return !first_violation(p).has_value(); }

std::vector<StreamAllocation> enumerate_corners(const HalfPlaneSet &hs)
{
    const auto lines = hs.with_box();
    std::vector<StreamAllocation> corners;
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const auto &p = lines[i];
            const auto &q = lines[j];
            const Rational det = p.a * q.b - q.a * p.b;
            if (det == 0)
                continue; // parallel or identical boundaries
            const StreamAllocation x{(p.c * q.b - q.c * p.b) / det, (p.a * q.c - q.a * p.c) / det};
            if (hs.contains(x))
                corners.push_back(x);
        }
    }
    if (corners.empty())
        throw std::domain_error("feasible region is empty");
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    return corners;
}

LpSolution maximize_over_corners(const HalfPlaneSet &hs, const Rational &w1, const Rational &w2)
{
    const auto corners = enumerate_corners(hs);
    // corners are ascending, so >= on a later corner implements the lexicographic tie-break
    LpSolution best{w1 * corners.front().lambda1 + w2 * corners.front().lambda2, corners.front()};
    for (size_t i = 1; i < corners.size(); ++i) {
        const Rational v = w1 * corners[i].lambda1 + w2 * corners[i].lambda2;
        if (v >= best.value)
            best = {v, corners[i]};
    }
    return best;
}

int scheme_number(Scheme s) { return s == Scheme::InterAndIntraNulling ? 1 : 2; }

Scheme scheme_from_number(int n)
{
    if (n == 1)
        return Scheme::InterAndIntraNulling;
    if (n == 2)
        return Scheme::IntraNullingOnly;
    throw std::invalid_argument("scheme must be 1 or 2, got " + std::to_string(n));
}

HalfPlaneSet scheme_constraints(Scheme scheme, const CellConfig &cfg)
{
    cfg.validate();
    const Rational m1(cfg.m1), m2(cfg.m2), n1(cfg.n1), n2(cfg.n2);
    HalfPlaneSet hs;
    hs.add({1, 1, 1, "lambda1 + lambda2 <= 1"});
    if (scheme == Scheme::InterAndIntraNulling) {
        hs.add({n1, 0, m1, "N1*lambda1 <= M1"});
        hs.add({n1, n2, m2, "N1*lambda1 + N2*lambda2 <= M2"});
    } else {
        hs.add({n1, n2, m1, "N1*lambda1 + N2*lambda2 <= M1"});
        hs.add({0, n2, m2, "N2*lambda2 <= M2"});
    }
    return hs;
}

LpSolution solve_scheme(Scheme scheme, const CellConfig &cfg)
{
    return maximize_over_corners(scheme_constraints(scheme, cfg), Rational(cfg.n1), Rational(cfg.n2));
}

LpSolution solve_scheme1(const CellConfig &cfg) { return solve_scheme(Scheme::InterAndIntraNulling, cfg); }

LpSolution solve_scheme2(const CellConfig &cfg) { return solve_scheme(Scheme::IntraNullingOnly, cfg); }

LpSolution solve_hotspot(std::int64_t hotspots, const CellConfig &cfg)
{
    if (hotspots < 1)
        throw std::invalid_argument("hotspot count must be >= 1");
    CellConfig merged = cfg;
    merged.n1 = hotspots * cfg.n1;
    return solve_scheme1(merged);
}

} // namespace uldl
