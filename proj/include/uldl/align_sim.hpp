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
#include <stdexcept>
#include <string>
#include <vector>

#include "uldl/cell_config.hpp"
#include "uldl/linalg.hpp"
#include "uldl/lp_corner.hpp"
#include "uldl/rational.hpp"

// Noiseless signal-space simulation of the time-extended alignment/nulling
// constructions. Achievability of one DoF per stream reduces to the rank and
// orthogonality conditions checked here.
namespace uldl::sim {

using linalg::Matrix;
using linalg::Vector;

/// The alignment depth is limited so that (T+1)^(N1 N2) stays at or below this.
inline constexpr std::int64_t kMaxExtendedExponentCount = 4096;
/// Dense working dimension max(M1, M2) * slots is limited to this.
inline constexpr std::int64_t kMaxSignalDimension = 4096;
/// Normalized inner products and leakages above this count as violations.
inline constexpr double kOrthogonalityTolerance = 1e-9;

class InfeasibleAllocationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class SizeCapError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Integer stream and slot bookkeeping for one simulated block. The nominal
/// block of (1/lambda1)(T+1)^(N1 N2) slots is replicated `replication` times
/// so every count is an integer; sub-block b carries its own copy of the
/// uplink alignment vectors.
struct SimPlan {
    CellConfig cfg;
    Scheme scheme = Scheme::InterAndIntraNulling;
    StreamAllocation alloc;
    std::int64_t t = 1;
    std::int64_t exponent_count = 1;     // T^(N1 N2)
    std::int64_t ext_exponent_count = 1; // (T+1)^(N1 N2)
    std::int64_t replication = 1;
    std::int64_t slots = 1;        // d
    std::int64_t alpha_streams = 1; // per cell-alpha user: replication * T^(N1 N2)
    std::int64_t beta_streams = 0;  // per cell-beta user: replication * (lambda2/lambda1) T^(N1 N2)
    std::vector<std::int64_t> block_start; // replication sub-blocks partition [0, slots)
    std::vector<std::int64_t> block_length;
};

/// Throws InfeasibleAllocationError (naming the violated constraint) when the
/// allocation breaks the scheme's program or lambda1 == 0, SizeCapError when
/// the block would exceed the supported size, std::invalid_argument on t < 1.
SimPlan make_plan(const CellConfig &cfg, std::int64_t t, const StreamAllocation &alloc, Scheme scheme);

/// (total streams) / slots, exact.
Rational achieved_dof(const SimPlan &plan);

/// Per-slot channel draws for a block of `slots` slots.
struct ChannelSet {
    CellConfig cfg;
    std::int64_t slots = 0;
    std::vector<std::vector<Vector>> h_alpha;            // [i][t], length M1 (user (alpha,i) -> BS alpha)
    std::vector<std::vector<Eigen::RowVectorXd>> h_beta; // [j][t], length M2 (BS beta -> user (beta,j))
    std::vector<Matrix> g_alpha;                         // [t], M1 x M2 (BS beta -> BS alpha)
    std::vector<std::vector<std::vector<double>>> g_beta; // [j][i][t] (user (alpha,i) -> user (beta,j))
};

/// Deterministic in `seed`. h and G entries are standard normal; cross scalars
/// g_beta are +-u with u log-uniform on [1/2, 2].
ChannelSet draw_channels(const CellConfig &cfg, std::int64_t slots, std::uint64_t seed);

/// Block-diagonal time extensions over all slots of a ChannelSet.
struct ExtendedChannels {
    CellConfig cfg;
    std::int64_t slots = 0;
    std::vector<Matrix> h_alpha;              // [i], (M1 d) x d
    std::vector<Matrix> h_beta;               // [j], d x (M2 d)
    Matrix g_alpha;                           // (M1 d) x (M2 d)
    std::vector<std::vector<Vector>> g_beta;  // [j][i], diagonal of the d x d matrix
    std::vector<double> h_beta_norm;          // [j], spectral norm of h_beta[j]
    double g_alpha_norm = 0.0;                // spectral norm of g_alpha

    Matrix g_beta_matrix(std::size_t j, std::size_t i) const { return g_beta[j][i].asDiagonal(); }
};

ExtendedChannels extend_channels(const ChannelSet &ch);

struct UplinkBeams {
    // d x (replication * T^(N1 N2)) unit columns shared by every cell-alpha user;
    // column c lives on sub-block block_of[c] and has exponent vector exponents[c]
    // (indexed [j * N1 + i]).
    Matrix vectors;
    std::vector<std::vector<int>> exponents;
    std::vector<std::int64_t> block_of;
};

struct DownlinkBeams {
    Matrix intra_basis;           // d x beta_streams, orthonormal, orthogonal to the aligned span
    std::vector<Matrix> per_user; // [j], (M2 d) x beta_streams, orthonormal
    double orthogonality_residual = 0.0; // worst normalized inner product against the constraint sets
};

struct BeamformingPlan {
    UplinkBeams uplink;
    DownlinkBeams downlink;
};

/// Monomial alignment vectors, one per exponent vector in [0, T-1]^(N1 N2)
/// and per replication sub-block.
UplinkBeams uplink_ia_beams(const ExtendedChannels &ext, const SimPlan &plan);

struct AlignmentDimension {
    std::int64_t total = 0;
    std::vector<std::int64_t> per_block;
};

/// Rank of { Gbar_beta_ji * v^(s) } over all i, j, s, measured per sub-block.
AlignmentDimension alignment_dimension(const ExtendedChannels &ext, const UplinkBeams &uplink, const SimPlan &plan);

/// Intra-cell basis and downlink beams for plan.scheme. `mix_seed` drives the
/// choice of a generic subspace inside each null space. Throws
/// std::domain_error if a numerical null space is too small.
DownlinkBeams downlink_in_beams(const ExtendedChannels &ext, const UplinkBeams &uplink, const SimPlan &plan,
                                std::uint64_t mix_seed);

struct SimReport {
    SimPlan plan;
    std::string construction; // "scheme1", "scheme2" or "simple"
    std::uint64_t seed = 0;
    std::int64_t alignment_rank = 0;
    std::vector<std::int64_t> alignment_rank_per_block;
    bool alignment_bounds_ok = false;
    double in_orthogonality_max_abs = 0.0;
    std::int64_t bs_alpha_rank = 0;
    double bs_alpha_leakage = 0.0;
    bool bs_alpha_decodable = false;
    std::vector<bool> beta_users_decodable;
    double beta_intra_leakage = 0.0;
    Rational achieved_dof;
    std::string failure; // empty unless the construction itself failed

    bool passed() const;
};

/// Rank/orthogonality audit of a complete beamforming plan.
SimReport verify_decoding(const ExtendedChannels &ext, const BeamformingPlan &beams, const SimPlan &plan,
                          std::uint64_t seed);

/// Draws channels for `seed`, builds both beam sets and verifies them.
SimReport run_scheme(const SimPlan &plan, std::uint64_t seed);

/// Exact N1-slot construction for (M1, M2, N1, N2) = (1, 2, n1, 1): one uplink
/// stream per user, perfectly aligned at the cell-beta user, and n1 - 1
/// downlink streams nulled at BS alpha.
SimReport run_simple_scheme(std::int64_t n1, std::uint64_t seed);

} // namespace uldl::sim
