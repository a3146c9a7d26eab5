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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "uldl/cell_config.hpp"
#include "uldl/cli/output.hpp"
#include "uldl/lp_corner.hpp"

namespace uldl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitSizeCap = 3;

int cmd_dof(const CellConfig &cfg, RecordWriter &out);

int cmd_gain(std::int64_t lambda_cap, std::size_t witnesses, RecordWriter &out);

enum class CurveMode { Bounds, Gain };

/// Sweeps (M, N, N, M) for M in [m_from, m_to].
int cmd_curve(CurveMode mode, std::int64_t n, std::int64_t m_from, std::int64_t m_to, RecordWriter &out);

/// Regime closed forms against both programs on [1, cap]^4. Returns
/// kExitInconsistent if any row disagrees.
int cmd_table2(std::int64_t lambda_cap, RecordWriter &out);

struct SimulateOptions {
    std::optional<CellConfig> cfg; // unset with `simple`
    bool simple = false;
    std::int64_t simple_n1 = 2;
    std::int64_t t = 1;
    std::optional<Scheme> scheme;          // defaults to 1 when m1 <= m2, else 2
    std::optional<StreamAllocation> alloc; // defaults to the program's maximizer
    std::int64_t seeds = 1;
    std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateOptions &opts, RecordWriter &out);

int cmd_delayed(std::int64_t seeds, std::uint64_t seed, RecordWriter &out);

int cmd_hotspot(std::int64_t hotspots, const CellConfig &cfg, RecordWriter &out);

/// Parses argv and dispatches. Errors go to `err`; the return value is the
/// process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace uldl::cli
