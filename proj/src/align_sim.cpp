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

#include "uldl/align_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace uldl::sim {

using linalg::hcat;
using linalg::numerical_rank;

namespace {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t cap)
{
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap)
            return cap + 1;
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string alloc_string(const StreamAllocation &a)
{
    return "(" + to_fraction_string(a.lambda1) + ", " + to_fraction_string(a.lambda2) + ")";
}

// Columns Gbar_beta_ji * v for every (j, i) and every uplink column, in that order.
Matrix aligned_columns(const ExtendedChannels &ext, const Matrix &uplink)
{
    const auto n1 = static_cast<size_t>(ext.cfg.n1);
    const auto n2 = static_cast<size_t>(ext.cfg.n2);
    Matrix out(ext.slots, static_cast<Eigen::Index>(n1 * n2) * uplink.cols());
    Eigen::Index col = 0;
    for (size_t j = 0; j < n2; ++j)
        for (size_t i = 0; i < n1; ++i)
            for (Eigen::Index c = 0; c < uplink.cols(); ++c)
                out.col(col++) = ext.g_beta[j][i].cwiseProduct(uplink.col(c));
    return out;
}

// [Hbar_alpha_1 U | ... | Hbar_alpha_N1 U]
Matrix alpha_signal_columns(const ExtendedChannels &ext, const Matrix &uplink)
{
    Matrix out(ext.cfg.m1 * ext.slots, ext.cfg.n1 * uplink.cols());
    for (std::int64_t i = 0; i < ext.cfg.n1; ++i)
        out.middleCols(i * uplink.cols(), uplink.cols()) = ext.h_alpha[static_cast<size_t>(i)] * uplink;
    return out;
}

double max_column_norm(const Matrix &a)
{
    return a.cols() == 0 ? 0.0 : a.colwise().norm().maxCoeff();
}

} // namespace

SimPlan make_plan(const CellConfig &cfg, std::int64_t t, const StreamAllocation &alloc, Scheme scheme)
{
    cfg.validate();
    if (t < 1)
        throw std::invalid_argument("alignment depth T must be >= 1");

    const HalfPlaneSet hs = scheme_constraints(scheme, cfg);
    if (const auto violated = hs.first_violation(alloc))
        throw InfeasibleAllocationError("allocation " + alloc_string(alloc) + " violates '" + *violated +
                                        "' of scheme " + std::to_string(scheme_number(scheme)) + " for " +
                                        cfg.to_string());
    if (alloc.lambda1 == 0)
        throw InfeasibleAllocationError("allocation " + alloc_string(alloc) +
                                        " has lambda1 = 0; the block length (1/lambda1)(T+1)^(N1 N2) is undefined");

    const std::int64_t k = cfg.n1 * cfg.n2;
    const std::int64_t ext_count = checked_pow(t + 1, k, kMaxExtendedExponentCount);
    if (ext_count > kMaxExtendedExponentCount)
        throw SizeCapError("(T+1)^(N1*N2) = " + std::to_string(t + 1) + "^" + std::to_string(k) + " exceeds the " +
                           std::to_string(kMaxExtendedExponentCount) + " limit");
    const std::int64_t exp_count = checked_pow(t, k, kMaxExtendedExponentCount);

    const Rational nominal_slots = Rational(ext_count) / alloc.lambda1;
    const Rational nominal_beta = alloc.lambda2 / alloc.lambda1 * exp_count;
    const std::int64_t r = std::lcm(nominal_slots.denominator(), nominal_beta.denominator());

    SimPlan plan;
    plan.cfg = cfg;
    plan.scheme = scheme;
    plan.alloc = alloc;
    plan.t = t;
    plan.exponent_count = exp_count;
    plan.ext_exponent_count = ext_count;
    plan.replication = r;
    plan.slots = (nominal_slots * r).numerator();
    plan.alpha_streams = r * exp_count;
    plan.beta_streams = (nominal_beta * r).numerator();

    const std::int64_t dim = std::max(cfg.m1, cfg.m2) * plan.slots;
    if (dim > kMaxSignalDimension)
        throw SizeCapError("signal dimension max(M1,M2)*d = " + std::to_string(dim) + " exceeds the " +
                           std::to_string(kMaxSignalDimension) + " limit");

    for (std::int64_t b = 0; b < r; ++b) {
        const std::int64_t start = b * plan.slots / r;
        const std::int64_t end = (b + 1) * plan.slots / r;
        plan.block_start.push_back(start);
        plan.block_length.push_back(end - start);
    }

    // Finite-T dimension counts. They follow from the program's constraints,
    // but are checked on the integers actually used.
    const std::int64_t alpha_total = cfg.n1 * plan.alpha_streams;
    const std::int64_t beta_total = cfg.n2 * plan.beta_streams;
    auto require = [&](bool ok, const std::string &what) {
        if (!ok)
            throw InfeasibleAllocationError("allocation " + alloc_string(alloc) + " fails finite-T count: " + what);
    };
    if (scheme == Scheme::InterAndIntraNulling) {
        require(alpha_total <= cfg.m1 * plan.slots, "N1*alpha_streams <= M1*d");
        require(alpha_total + beta_total <= cfg.m2 * plan.slots, "N1*alpha_streams + N2*beta_streams <= M2*d");
    } else {
        require(alpha_total + beta_total <= cfg.m1 * plan.slots, "N1*alpha_streams + N2*beta_streams <= M1*d");
        require(beta_total <= cfg.m2 * plan.slots, "N2*beta_streams <= M2*d");
    }
    require(plan.beta_streams + r * ext_count <= plan.slots, "beta_streams + r*(T+1)^(N1*N2) <= d");
    return plan;
}

Rational achieved_dof(const SimPlan &plan)
{
    return Rational(plan.cfg.n1 * plan.alpha_streams + plan.cfg.n2 * plan.beta_streams, plan.slots);
}

ChannelSet draw_channels(const CellConfig &cfg, std::int64_t slots, std::uint64_t seed)
{
    cfg.validate();
    if (slots < 1)
        throw std::invalid_argument("slot count must be >= 1");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> log_mag(std::log(0.5), std::log(2.0));
    std::bernoulli_distribution sign;

    const auto n1 = static_cast<size_t>(cfg.n1);
    const auto n2 = static_cast<size_t>(cfg.n2);
    const auto d = static_cast<size_t>(slots);

    ChannelSet ch;
    ch.cfg = cfg;
    ch.slots = slots;
    ch.h_alpha.assign(n1, std::vector<Vector>(d));
    ch.h_beta.assign(n2, std::vector<Eigen::RowVectorXd>(d));
    ch.g_alpha.assign(d, Matrix());
    ch.g_beta.assign(n2, std::vector<std::vector<double>>(n1, std::vector<double>(d)));

    for (size_t t = 0; t < d; ++t) {
        for (size_t i = 0; i < n1; ++i) {
            ch.h_alpha[i][t].resize(cfg.m1);
            for (auto &x : ch.h_alpha[i][t])
                x = normal(rng);
        }
        for (size_t j = 0; j < n2; ++j) {
            ch.h_beta[j][t].resize(cfg.m2);
            for (auto &x : ch.h_beta[j][t])
                x = normal(rng);
        }
        ch.g_alpha[t].resize(cfg.m1, cfg.m2);
        for (Eigen::Index c = 0; c < cfg.m2; ++c)
            for (Eigen::Index r = 0; r < cfg.m1; ++r)
                ch.g_alpha[t](r, c) = normal(rng);
        for (size_t j = 0; j < n2; ++j)
            for (size_t i = 0; i < n1; ++i) {
                const double mag = std::exp(log_mag(rng));
                ch.g_beta[j][i][t] = sign(rng) ? mag : -mag;
            }
    }
    return ch;
}

ExtendedChannels extend_channels(const ChannelSet &ch)
{
    const auto &cfg = ch.cfg;
    const std::int64_t d = ch.slots;
    const auto n1 = static_cast<size_t>(cfg.n1);
    const auto n2 = static_cast<size_t>(cfg.n2);

    ExtendedChannels ext;
    ext.cfg = cfg;
    ext.slots = d;
    ext.h_alpha.assign(n1, Matrix::Zero(cfg.m1 * d, d));
    ext.h_beta.assign(n2, Matrix::Zero(d, cfg.m2 * d));
    ext.g_alpha = Matrix::Zero(cfg.m1 * d, cfg.m2 * d);
    ext.g_beta.assign(n2, std::vector<Vector>(n1, Vector(d)));
    ext.h_beta_norm.assign(n2, 0.0);

    for (std::int64_t t = 0; t < d; ++t) {
        const auto ts = static_cast<size_t>(t);
        for (size_t i = 0; i < n1; ++i)
            ext.h_alpha[i].block(t * cfg.m1, t, cfg.m1, 1) = ch.h_alpha[i][ts];
        for (size_t j = 0; j < n2; ++j) {
            ext.h_beta[j].block(t, t * cfg.m2, 1, cfg.m2) = ch.h_beta[j][ts];
            ext.h_beta_norm[j] = std::max(ext.h_beta_norm[j], ch.h_beta[j][ts].norm());
        }
        ext.g_alpha.block(t * cfg.m1, t * cfg.m2, cfg.m1, cfg.m2) = ch.g_alpha[ts];
        ext.g_alpha_norm = std::max(ext.g_alpha_norm, linalg::spectral_norm(ch.g_alpha[ts]));
        for (size_t j = 0; j < n2; ++j)
            for (size_t i = 0; i < n1; ++i)
                ext.g_beta[j][i](t) = ch.g_beta[j][i][ts];
    }
    return ext;
}

UplinkBeams uplink_ia_beams(const ExtendedChannels &ext, const SimPlan &plan)
{
    const auto n1 = static_cast<size_t>(plan.cfg.n1);
    const auto k = static_cast<size_t>(plan.cfg.n1 * plan.cfg.n2);
    if (ext.slots != plan.slots)
        throw std::invalid_argument("channel block length does not match the plan");

    UplinkBeams up;
    up.vectors = Matrix::Zero(plan.slots, plan.alpha_streams);
    Eigen::Index col = 0;
    for (std::int64_t b = 0; b < plan.replication; ++b) {
        const auto start = plan.block_start[static_cast<size_t>(b)];
        const auto len = plan.block_length[static_cast<size_t>(b)];
        std::vector<int> s(k, 0);
        for (std::int64_t e = 0; e < plan.exponent_count; ++e) {
            for (std::int64_t t = start; t < start + len; ++t) {
                double v = 1.0;
                for (size_t idx = 0; idx < k; ++idx)
                    for (int p = 0; p < s[idx]; ++p)
                        v *= ext.g_beta[idx / n1][idx % n1](t);
                up.vectors(t, col) = v;
            }
            up.exponents.push_back(s);
            up.block_of.push_back(b);
            ++col;
            // next exponent vector in [0, T-1]^k, last index fastest
            for (size_t idx = k; idx-- > 0;) {
                if (++s[idx] < plan.t)
                    break;
                s[idx] = 0;
            }
        }
    }
    up.vectors = linalg::normalize_columns(std::move(up.vectors));
    return up;
}

AlignmentDimension alignment_dimension(const ExtendedChannels &ext, const UplinkBeams &uplink, const SimPlan &plan)
{
    AlignmentDimension out;
    const Matrix aligned = aligned_columns(ext, uplink.vectors);
    for (std::int64_t b = 0; b < plan.replication; ++b) {
        const auto start = plan.block_start[static_cast<size_t>(b)];
        const auto len = plan.block_length[static_cast<size_t>(b)];
        std::vector<Eigen::Index> cols;
        for (Eigen::Index c = 0; c < aligned.cols(); ++c)
            if (uplink.block_of[static_cast<size_t>(c % uplink.vectors.cols())] == b)
                cols.push_back(c);
        Matrix block(len, static_cast<Eigen::Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            block.col(static_cast<Eigen::Index>(c)) = aligned.col(cols[c]).segment(start, len);
        const auto r = static_cast<std::int64_t>(numerical_rank(block));
        out.per_block.push_back(r);
        out.total += r;
    }
    return out;
}

DownlinkBeams downlink_in_beams(const ExtendedChannels &ext, const UplinkBeams &uplink, const SimPlan &plan,
                                std::uint64_t mix_seed)
{
    const auto n2 = static_cast<size_t>(plan.cfg.n2);
    const Eigen::Index bs = plan.beta_streams;
    const Eigen::Index tx_dim = plan.cfg.m2 * plan.slots;

    DownlinkBeams down;
    down.per_user.assign(n2, Matrix(tx_dim, 0));
    if (bs == 0) {
        down.intra_basis = Matrix(plan.slots, 0);
        return down;
    }

    std::mt19937_64 rng(mix_seed);
    const Matrix aligned = aligned_columns(ext, uplink.vectors);
    down.intra_basis =
        linalg::generic_subspace(linalg::orthogonal_complement(aligned, plan.slots), bs, rng);
    down.orthogonality_residual = linalg::max_normalized_inner(down.intra_basis, aligned);

    // Inter-cell nulling set {Gbar_alpha^T Hbar_alpha_i v^(s)}.
    Matrix inter(tx_dim, 0);
    if (plan.scheme == Scheme::InterAndIntraNulling)
        inter = ext.g_alpha.transpose() * alpha_signal_columns(ext, uplink.vectors);

    for (size_t j = 0; j < n2; ++j) {
        Matrix constraints = inter;
        for (size_t other = 0; other < n2; ++other)
            if (other != j)
                constraints = hcat(constraints, ext.h_beta[other].transpose() * down.intra_basis);
        down.per_user[j] =
            linalg::generic_subspace(linalg::orthogonal_complement(constraints, tx_dim), bs, rng);
        down.orthogonality_residual =
            std::max(down.orthogonality_residual, linalg::max_normalized_inner(down.per_user[j], constraints));
    }
    return down;
}

bool SimReport::passed() const
{
    if (!failure.empty() || !alignment_bounds_ok || !bs_alpha_decodable)
        return false;
    if (in_orthogonality_max_abs >= kOrthogonalityTolerance)
        return false;
    return std::all_of(beta_users_decodable.begin(), beta_users_decodable.end(), [](bool b) { return b; });
}

SimReport verify_decoding(const ExtendedChannels &ext, const BeamformingPlan &beams, const SimPlan &plan,
                          std::uint64_t seed)
{
    SimReport rep;
    rep.plan = plan;
    rep.construction = plan.scheme == Scheme::InterAndIntraNulling ? "scheme1" : "scheme2";
    rep.seed = seed;
    rep.achieved_dof = achieved_dof(plan);
    rep.in_orthogonality_max_abs = beams.downlink.orthogonality_residual;

    const auto &up = beams.uplink;
    const auto &down = beams.downlink;
    const auto n2 = static_cast<size_t>(plan.cfg.n2);

    const AlignmentDimension dim = alignment_dimension(ext, up, plan);
    rep.alignment_rank = dim.total;
    rep.alignment_rank_per_block = dim.per_block;
    rep.alignment_bounds_ok = std::all_of(dim.per_block.begin(), dim.per_block.end(), [&](std::int64_t r) {
        return r >= plan.exponent_count && r <= plan.ext_exponent_count;
    });

    // BS alpha
    const Matrix signal = alpha_signal_columns(ext, up.vectors);
    const std::int64_t alpha_total = plan.cfg.n1 * plan.alpha_streams;
    if (plan.scheme == Scheme::InterAndIntraNulling) {
        rep.bs_alpha_rank = numerical_rank(signal);
        const Matrix q = linalg::column_span_basis(signal);
        for (size_t j = 0; j < n2; ++j) {
            const Matrix leak = q.transpose() * (ext.g_alpha * down.per_user[j]);
            rep.bs_alpha_leakage = std::max(rep.bs_alpha_leakage, max_column_norm(leak) / ext.g_alpha_norm);
        }
        rep.bs_alpha_decodable =
            rep.bs_alpha_rank == alpha_total && rep.bs_alpha_leakage < kOrthogonalityTolerance;
    } else {
        Matrix all = signal;
        for (size_t j = 0; j < n2; ++j)
            all = hcat(all, ext.g_alpha * down.per_user[j]);
        rep.bs_alpha_rank = numerical_rank(all);
        rep.bs_alpha_decodable = rep.bs_alpha_rank == alpha_total + plan.cfg.n2 * plan.beta_streams;
    }

    // cell-beta users
    const Matrix aligned_basis = linalg::column_span_basis(aligned_columns(ext, up.vectors));
    rep.beta_users_decodable.assign(n2, true);
    if (plan.beta_streams > 0) {
        for (size_t j = 0; j < n2; ++j) {
            const Matrix desired = ext.h_beta[j] * down.per_user[j];
            const bool separable =
                numerical_rank(hcat(desired, aligned_basis)) == plan.beta_streams + rep.alignment_rank;
            // after projecting onto the intra-cell basis only the desired streams remain
            const bool resolvable = numerical_rank(down.intra_basis.transpose() * desired) == plan.beta_streams;
            double leak = 0.0;
            for (size_t other = 0; other < n2; ++other)
                if (other != j)
                    leak = std::max(leak, max_column_norm(down.intra_basis.transpose() *
                                                          (ext.h_beta[j] * down.per_user[other])) /
                                              ext.h_beta_norm[j]);
            rep.beta_intra_leakage = std::max(rep.beta_intra_leakage, leak);
            rep.beta_users_decodable[j] = separable && resolvable && leak < kOrthogonalityTolerance;
        }
    }
    return rep;
}

SimReport run_scheme(const SimPlan &plan, std::uint64_t seed)
{
    const ExtendedChannels ext = extend_channels(draw_channels(plan.cfg, plan.slots, seed));
    BeamformingPlan beams;
    beams.uplink = uplink_ia_beams(ext, plan);
    try {
        beams.downlink = downlink_in_beams(ext, beams.uplink, plan, splitmix64(seed));
    } catch (const std::domain_error &e) {
        SimReport rep;
        rep.plan = plan;
        rep.construction = plan.scheme == Scheme::InterAndIntraNulling ? "scheme1" : "scheme2";
        rep.seed = seed;
        rep.achieved_dof = achieved_dof(plan);
        rep.failure = e.what();
        return rep;
    }
    return verify_decoding(ext, beams, plan, seed);
}

SimReport run_simple_scheme(std::int64_t n1, std::uint64_t seed)
{
    if (n1 < 1)
        throw std::invalid_argument("n1 must be >= 1");
    const CellConfig cfg{1, 2, n1, 1};

    SimPlan plan;
    plan.cfg = cfg;
    plan.scheme = Scheme::InterAndIntraNulling;
    plan.alloc = {Rational(1, n1), Rational(n1 - 1, n1)};
    plan.slots = n1;
    plan.alpha_streams = 1;
    plan.beta_streams = n1 - 1;
    plan.block_start = {0};
    plan.block_length = {n1};

    const ExtendedChannels ext = extend_channels(draw_channels(cfg, n1, seed));
    const auto users = static_cast<size_t>(n1);

    // v_alpha_i = Gbar_beta_1i^{-1} Gbar_beta_11 v_alpha_1 with v_alpha_1 all-ones
    Matrix uplink(n1, n1);
    for (size_t i = 0; i < users; ++i)
        uplink.col(static_cast<Eigen::Index>(i)) = ext.g_beta[0][0].cwiseQuotient(ext.g_beta[0][i]);
    uplink = linalg::normalize_columns(std::move(uplink));

    SimReport rep;
    rep.plan = plan;
    rep.construction = "simple";
    rep.seed = seed;
    rep.achieved_dof = achieved_dof(plan);

    Matrix aligned(n1, n1);
    for (size_t i = 0; i < users; ++i)
        aligned.col(static_cast<Eigen::Index>(i)) =
            ext.g_beta[0][i].cwiseProduct(uplink.col(static_cast<Eigen::Index>(i)));
    rep.alignment_rank = numerical_rank(aligned);
    rep.alignment_rank_per_block = {rep.alignment_rank};
    rep.alignment_bounds_ok = rep.alignment_rank == 1;

    // n1 - 1 downlink beams inside the null space of Gbar_alpha
    std::mt19937_64 rng(splitmix64(seed));
    const Matrix rows = ext.g_alpha.transpose();
    const Matrix downlink =
        linalg::generic_subspace(linalg::orthogonal_complement(rows, 2 * n1), n1 - 1, rng);
    rep.in_orthogonality_max_abs = linalg::max_normalized_inner(downlink, rows);

    Matrix signal(n1, n1);
    for (size_t i = 0; i < users; ++i)
        signal.col(static_cast<Eigen::Index>(i)) = ext.h_alpha[i] * uplink.col(static_cast<Eigen::Index>(i));
    rep.bs_alpha_rank = numerical_rank(signal);
    rep.bs_alpha_leakage = max_column_norm(ext.g_alpha * downlink) / ext.g_alpha_norm;
    rep.bs_alpha_decodable = rep.bs_alpha_rank == n1 && rep.bs_alpha_leakage < kOrthogonalityTolerance;

    const Matrix received = hcat(ext.h_beta[0] * downlink, aligned.col(0));
    rep.beta_users_decodable = {numerical_rank(received) == n1};
    return rep;
}

} // namespace uldl::sim
