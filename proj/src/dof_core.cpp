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

#include "uldl/dof_core.hpp"

#include <algorithm>

#include "uldl/lp_corner.hpp"

namespace uldl {

void CellConfig::validate() const
{
    if (m1 < 1 || m2 < 1 || n1 < 1 || n2 < 1)
        throw std::invalid_argument("cell config fields must all be >= 1, got " + to_string());
}

std::string CellConfig::to_string() const
{
    return "(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(n1) + "," +
           std::to_string(n2) + ")";
}

namespace {

std::int64_t pos(std::int64_t a) { return std::max<std::int64_t>(0, a); }

} // namespace

Rational sum_dof(const CellConfig &cfg)
{
    cfg.validate();
    const auto [m1, m2, n1, n2] = cfg;
    const Rational distributed(n1 * n2 + std::min(m1, n1) * pos(n1 - n2) + std::min(m2, n2) * pos(n2 - n1),
                               std::max(n1, n2));
    return std::min({distributed, Rational(m1 + n2), Rational(m2 + n1), Rational(std::max(m1, m2)),
                     Rational(std::max(n1, n2))});
}

Rational mimo_ic_upper(const CellConfig &cfg)
{
    cfg.validate();
    const auto [m1, m2, n1, n2] = cfg;
    return Rational(std::min({m1 + n2, m2 + n1, std::max(m1, m2), std::max(n1, n2)}));
}

Rational single_cell_lower(const CellConfig &cfg)
{
    cfg.validate();
    const auto [m1, m2, n1, n2] = cfg;
    return Rational(std::max(std::min(m1, n1), std::min(m2, n2)));
}

Rational conventional_upper(const CellConfig &cfg)
{
    cfg.validate();
    // d_upper(i,j,k,l) with (i,j,k,l) = (M1,M2,N1,N2)
    const auto [i, j, k, l] = cfg;
    return Rational(std::min({i + j, k + l, std::max(i, l), std::max(j, k)}));
}

namespace {

std::int64_t value_of(Param p, const CellConfig &cfg)
{
    switch (p) {
    case Param::M1: return cfg.m1;
    case Param::M2: return cfg.m2;
    case Param::N1: return cfg.n1;
    case Param::N2: return cfg.n2;
    }
    return 0;
}

const char *param_name(Param p)
{
    switch (p) {
    case Param::M1: return "M1";
    case Param::M2: return "M2";
    case Param::N1: return "N1";
    case Param::N2: return "N2";
    }
    return "?";
}

} // namespace

bool RegimeRow::applies(const CellConfig &cfg) const
{
    for (size_t i = 0; i + 1 < ordering.size(); ++i)
        if (value_of(ordering[i], cfg) > value_of(ordering[i + 1], cfg))
            return false;
    return true;
}

std::string RegimeRow::ordering_string() const
{
    std::string out = param_name(ordering[0]);
    for (size_t i = 1; i < ordering.size(); ++i)
        out += std::string(" <= ") + param_name(ordering[i]);
    return out;
}

const std::array<RegimeRow, 24> &regime_table()
{
    using P = Param;
    using F = Formula;
    // Row 14's d2 entry is M1: the scheme-2 program has N1 l1 + N2 l2 <= M1, so
    // its optimum can never exceed M1 (the commonly printed N2 is a misprint).
    static const std::array<RegimeRow, 24> table{{
        {1, {P::M1, P::M2, P::N1, P::N2}, F::M2, F::M1, F::M2},
        {2, {P::M1, P::M2, P::N2, P::N1}, F::M2, F::M1, F::M2},
        {3, {P::M1, P::N1, P::M2, P::N2}, F::M2, F::M1, F::M2},
        {4, {P::M1, P::N1, P::N2, P::M2}, F::N2, F::M1, F::N2},
        {5, {P::M1, P::N2, P::M2, P::N1}, F::MinM2UplinkSkew, F::M1, F::MinM2UplinkSkew},
        {6, {P::M1, P::N2, P::N1, P::M2}, F::UplinkSkew, F::M1, F::UplinkSkew},
        {7, {P::M2, P::M1, P::N1, P::N2}, F::M2, F::M1, F::M1},
        {8, {P::M2, P::M1, P::N2, P::N1}, F::M2, F::M1, F::M1},
        {9, {P::M2, P::N1, P::M1, P::N2}, F::M2, F::MinM1DownlinkSkew, F::MinM1DownlinkSkew},
        {10, {P::M2, P::N1, P::N2, P::M1}, F::M2, F::DownlinkSkew, F::DownlinkSkew},
        {11, {P::M2, P::N2, P::M1, P::N1}, F::M2, F::M1, F::M1},
        {12, {P::M2, P::N2, P::N1, P::M1}, F::M2, F::N1, F::N1},
        {13, {P::N1, P::M1, P::M2, P::N2}, F::M2, F::M1, F::M2},
        {14, {P::N1, P::M1, P::N2, P::M2}, F::N2, F::M1, F::N2},
        {15, {P::N1, P::M2, P::M1, P::N2}, F::M2, F::MinM1DownlinkSkew, F::MinM1DownlinkSkew},
        {16, {P::N1, P::M2, P::N2, P::M1}, F::M2, F::DownlinkSkew, F::DownlinkSkew},
        {17, {P::N1, P::N2, P::M1, P::M2}, F::N2, F::N2, F::N2},
        {18, {P::N1, P::N2, P::M2, P::M1}, F::N2, F::N2, F::N2},
        {19, {P::N2, P::M1, P::M2, P::N1}, F::MinM2UplinkSkew, F::M1, F::MinM2UplinkSkew},
        {20, {P::N2, P::M1, P::N1, P::M2}, F::UplinkSkew, F::M1, F::UplinkSkew},
        {21, {P::N2, P::M2, P::M1, P::N1}, F::M2, F::M1, F::M1},
        {22, {P::N2, P::M2, P::N1, P::M1}, F::M2, F::N1, F::N1},
        {23, {P::N2, P::N1, P::M1, P::M2}, F::N1, F::N1, F::N1},
        {24, {P::N2, P::N1, P::M2, P::M1}, F::N1, F::N1, F::N1},
    }};
    return table;
}

Rational evaluate(Formula f, const CellConfig &cfg)
{
    const auto [m1, m2, n1, n2] = cfg;
    const Rational uplink_skew(n1 * n2 + m1 * (n1 - n2), n1);
    const Rational downlink_skew(n1 * n2 + m2 * (n2 - n1), n2);
    switch (f) {
    case Formula::M1: return Rational(m1);
    case Formula::M2: return Rational(m2);
    case Formula::N1: return Rational(n1);
    case Formula::N2: return Rational(n2);
    case Formula::UplinkSkew: return uplink_skew;
    case Formula::DownlinkSkew: return downlink_skew;
    case Formula::MinM2UplinkSkew: return std::min(Rational(m2), uplink_skew);
    case Formula::MinM1DownlinkSkew: return std::min(Rational(m1), downlink_skew);
    }
    throw std::logic_error("unknown formula");
}

std::string formula_name(Formula f)
{
    switch (f) {
    case Formula::M1: return "M1";
    case Formula::M2: return "M2";
    case Formula::N1: return "N1";
    case Formula::N2: return "N2";
    case Formula::UplinkSkew: return "(N1*N2+M1*(N1-N2))/N1";
    case Formula::DownlinkSkew: return "(N1*N2+M2*(N2-N1))/N2";
    case Formula::MinM2UplinkSkew: return "min(M2,(N1*N2+M1*(N1-N2))/N1)";
    case Formula::MinM1DownlinkSkew: return "min(M1,(N1*N2+M2*(N2-N1))/N2)";
    }
    return "?";
}

std::vector<RegimeRow> classify_regime(const CellConfig &cfg)
{
    cfg.validate();
    std::vector<RegimeRow> rows;
    for (const auto &row : regime_table())
        if (row.applies(cfg))
            rows.push_back(row);
    if (rows.empty())
        throw InconsistencyError("no regime row covers " + cfg.to_string());
    return rows;
}

RegimeValues regime_closed_forms(const CellConfig &cfg)
{
    const auto rows = classify_regime(cfg);
    auto eval_row = [&](const RegimeRow &row) {
        return RegimeValues{evaluate(row.d1, cfg), evaluate(row.d2, cfg), evaluate(row.dmax, cfg)};
    };
    const RegimeValues first = eval_row(rows.front());
    for (size_t i = 1; i < rows.size(); ++i) {
        if (eval_row(rows[i]) != first)
            throw InconsistencyError("regime rows " + std::to_string(rows.front().index) + " and " +
                                     std::to_string(rows[i].index) + " disagree at " + cfg.to_string());
    }
    return first;
}

HotspotBounds hotspot_bounds(std::int64_t hotspots, const CellConfig &cfg)
{
    if (hotspots < 1)
        throw std::invalid_argument("hotspot count must be >= 1");
    cfg.validate();
    const auto [m1, m2, n1, n2] = cfg;
    const std::int64_t lm1 = hotspots * m1;
    const std::int64_t ln1 = hotspots * n1;
    const Rational upper(std::min({lm1 + m2, ln1 + n2, std::max(lm1, n2), std::max(ln1, m2)}));
    return HotspotBounds{upper, solve_hotspot(hotspots, cfg).value};
}

} // namespace uldl
