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

#include "uldl/delayed_csit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace uldl::delayed {

Tagged operator+(Tagged a, Tagged b) { return {a.value + b.value, a.slots | b.slots}; }
Tagged operator-(Tagged a, Tagged b) { return {a.value - b.value, a.slots | b.slots}; }
Tagged operator*(Tagged a, Tagged b) { return {a.value * b.value, a.slots | b.slots}; }
Tagged operator/(Tagged a, Tagged b) { return {a.value / b.value, a.slots | b.slots}; }

namespace {

double condition_number(const Eigen::MatrixXd &a)
{
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto &s = svd.singularValues();
    const double lo = s(s.size() - 1);
    return lo > 0.0 ? s(0) / lo : INFINITY;
}

} // namespace

DelayedChannelTrace draw_trace(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    DelayedChannelTrace tr;
    for (int t = 1; t <= kSlots; ++t) {
        tr.h1[t] = normal(rng);
        tr.h2[t] = normal(rng);
        tr.g1[t] = normal(rng);
        tr.g2[t] = normal(rng);
        tr.g_vec[t] = {normal(rng), normal(rng)};
        tr.h_vec[t] = {normal(rng), normal(rng)};
    }
    while (std::abs(tr.g2[2]) < kMinPivot)
        tr.g2[2] = normal(rng);
    return tr;
}

bool causality_holds(const std::vector<TransmitCoefficient> &record)
{
    return std::all_of(record.begin(), record.end(), [](const TransmitCoefficient &c) {
        return c.slot >= 1 && (c.coefficient.slots >> c.slot) == 0 && (c.coefficient.slots & 1u) == 0;
    });
}

bool DelayedReport::passed() const
{
    return causality_ok && !ill_conditioned && max_abs_error < kDecodeTolerance &&
           b1_cancellation < kCancellationTolerance;
}

DelayedReport run_delayed_scheme(std::uint64_t seed, std::optional<std::array<double, kStreams>> symbols)
{
    const DelayedChannelTrace tr = draw_trace(seed);
    DelayedReport rep;
    rep.seed = seed;
    if (symbols) {
        rep.symbols_sent = *symbols;
    } else {
        std::mt19937_64 rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (auto &s : rep.symbols_sent)
            s = normal(rng);
    }
    const auto [a1, a2, b1, c1, c2] = rep.symbols_sent;
    const Eigen::Vector2d c(c1, c2);

    auto ch = [](double v, int slot) { return Tagged::channel(v, slot); };
    const Tagged one = Tagged::constant(1.0);

    // Transmit coefficients, built only from what each transmitter knows at that slot.
    auto &rec = rep.record;
    rec.push_back({1, "user(alpha,1)", "a1", one});
    rec.push_back({1, "user(alpha,2)", "b1", one});
    rec.push_back({2, "user(alpha,1)", "a2", one});
    rec.push_back({2, "user(alpha,2)", "b1", one});
    rec.push_back({3, "BS beta", "c1 on antenna 1", one});
    rec.push_back({3, "BS beta", "c2 on antenna 2", one});
    const Tagged l7_a1 = ch(tr.g1[1], 1);
    const Tagged l7_a2 = Tagged::constant(0.0) - ch(tr.g2[1], 1) * ch(tr.g1[2], 2) / ch(tr.g2[2], 2);
    const Tagged l3_c1 = ch(tr.g_vec[3](0), 3);
    const Tagged l3_c2 = ch(tr.g_vec[3](1), 3);
    rec.push_back({4, "user(alpha,1)", "L7 weight on a1", l7_a1});
    rec.push_back({4, "user(alpha,1)", "L7 weight on a2", l7_a2});
    rec.push_back({4, "BS beta", "L3 weight on c1", l3_c1});
    rec.push_back({4, "BS beta", "L3 weight on c2", l3_c2});
    rep.causality_ok = causality_holds(rec);

    // Slot 4 transmit signals.
    const double x_alpha1 = l7_a1.value * a1 + l7_a2.value * a2;
    const double l3 = l3_c1.value * c1 + l3_c2.value * c2;
    const Eigen::Vector2d x_beta(l3, l3);

    // BS alpha observations
    const double y1 = tr.h1[1] * a1 + tr.h2[1] * b1;
    const double y2 = tr.h1[2] * a2 + tr.h2[2] * b1;
    const double y3 = tr.g_vec[3] * c;
    const double y4 = tr.h1[4] * x_alpha1 + tr.g_vec[4] * x_beta;
    // user beta observations
    const double z1 = tr.g1[1] * a1 + tr.g2[1] * b1;
    const double z2 = tr.g1[2] * a2 + tr.g2[2] * b1;
    const double z3 = tr.h_vec[3] * c;
    const double z4 = tr.h_vec[4] * x_beta + tr.g1[4] * x_alpha1;

    // BS alpha: strip the L3 it overheard at slot 3, then solve {L1, L2, L7}.
    const double l7_at_alpha = (y4 - tr.g_vec[4].sum() * y3) / tr.h1[4];
    Eigen::Matrix3d a;
    a << tr.h1[1], 0.0, tr.h2[1],
         0.0, tr.h1[2], tr.h2[2],
         l7_a1.value, l7_a2.value, 0.0;
    const Eigen::Vector3d alpha_hat = a.colPivHouseholderQr().solve(Eigen::Vector3d(y1, y2, l7_at_alpha));
    rep.condition_alpha = condition_number(a);

    // User beta: rebuild L7 from slots 1 and 2, strip it, then solve {L3, L6}.
    const double ratio = tr.g2[1] / tr.g2[2];
    const double l7_at_beta = z1 - ratio * z2;
    rep.b1_cancellation = std::abs(tr.g2[1] - ratio * tr.g2[2]) / std::max(std::abs(tr.g2[1]), 1.0);
    const double l3_at_beta = (z4 - tr.g1[4] * l7_at_beta) / tr.h_vec[4].sum();
    Eigen::Matrix2d b;
    b << tr.g_vec[3], tr.h_vec[3];
    const Eigen::Vector2d beta_hat = b.colPivHouseholderQr().solve(Eigen::Vector2d(l3_at_beta, z3));
    rep.condition_beta = condition_number(b);

    // The divisions by h1[4] and the summed h_vec[4] are part of the decoding maps too.
    const double pivot = std::min(std::abs(tr.h1[4]), std::abs(tr.h_vec[4].sum()));
    rep.ill_conditioned = rep.condition_alpha > kMaxCondition || rep.condition_beta > kMaxCondition ||
                          !(pivot > 1.0 / kMaxCondition);

    rep.decoded_alpha = {alpha_hat(0), alpha_hat(1), alpha_hat(2)};
    rep.decoded_beta = {beta_hat(0), beta_hat(1)};
    const std::array<double, kStreams> decoded = {alpha_hat(0), alpha_hat(1), alpha_hat(2), beta_hat(0),
                                                  beta_hat(1)};
    for (int k = 0; k < kStreams; ++k) {
        const double err = std::abs(decoded[k] - rep.symbols_sent[k]);
        rep.max_abs_error = std::isfinite(err) ? std::max(rep.max_abs_error, err) : INFINITY;
    }
    return rep;
}

} // namespace uldl::delayed
