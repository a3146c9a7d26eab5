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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uldl/rational.hpp"

// Four-slot scheme for (M1, M2, N1, N2) = (1, 2, 2, 1) where the transmitters
// only learn a slot's channels after that slot. Five symbols in four slots.
namespace uldl::delayed {

inline constexpr int kSlots = 4;
inline constexpr int kStreams = 5;
inline constexpr double kMinPivot = 1e-6;
inline constexpr double kMaxCondition = 1e10;
inline constexpr double kCancellationTolerance = 1e-9;
inline constexpr double kDecodeTolerance = 1e-6;

/// Channels per slot, index 0 unused so that h1[t] is slot t.
struct DelayedChannelTrace {
    std::array<double, kSlots + 1> h1{}, h2{}; // users (alpha,1), (alpha,2) -> BS alpha
    std::array<double, kSlots + 1> g1{}, g2{}; // users (alpha,1), (alpha,2) -> user beta
    std::array<Eigen::RowVector2d, kSlots + 1> g_vec; // BS beta -> BS alpha
    std::array<Eigen::RowVector2d, kSlots + 1> h_vec; // BS beta -> user beta
};

/// Standard normal draws; g2[2] is redrawn while |g2[2]| < kMinPivot.
DelayedChannelTrace draw_trace(std::uint64_t seed);

/// A real value together with the set of slots whose channels it was computed
/// from (bit t set for slot t).
struct Tagged {
    double value = 0.0;
    std::uint32_t slots = 0;

    static Tagged constant(double v) { return {v, 0}; }
    static Tagged channel(double v, int slot) { return {v, 1u << slot}; }
};

Tagged operator+(Tagged a, Tagged b);
Tagged operator-(Tagged a, Tagged b);
Tagged operator*(Tagged a, Tagged b);
Tagged operator/(Tagged a, Tagged b);

/// One coefficient a transmitter applies at a given slot.
struct TransmitCoefficient {
    int slot = 0;
    std::string transmitter;
    std::string role;
    Tagged coefficient;
};

/// True when every coefficient depends only on channels of earlier slots.
bool causality_holds(const std::vector<TransmitCoefficient> &record);

struct DelayedReport {
    std::uint64_t seed = 0;
    std::array<double, kStreams> symbols_sent{}; // a1, a2, b1, c1, c2
    std::array<double, 3> decoded_alpha{};       // a1, a2, b1
    std::array<double, 2> decoded_beta{};        // c1, c2
    double max_abs_error = 0.0;
    bool causality_ok = false;
    double b1_cancellation = 0.0; // relative b1 residue in the user's rebuilt L7
    double condition_alpha = 0.0;
    double condition_beta = 0.0;
    bool ill_conditioned = false;
    int streams = kStreams;
    int slots = kSlots;
    Rational dof{kStreams, kSlots};
    std::vector<TransmitCoefficient> record;

    bool passed() const;
};

/// Runs the schedule noiselessly and decodes at both receivers. Symbols are
/// drawn standard normal when not given.
DelayedReport run_delayed_scheme(std::uint64_t seed, std::optional<std::array<double, kStreams>> symbols = {});

} // namespace uldl::delayed
