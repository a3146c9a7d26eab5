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

#include <random>

#include <Eigen/Dense>

namespace uldl::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Singular values above eps * sigma_max * max(rows, cols) count toward rank.
inline constexpr double kRankEpsilon = 1e-12;

Eigen::Index numerical_rank(const Matrix &a, double eps = kRankEpsilon);

// Orthonormal basis of the column span of `a` (numerical rank columns).
Matrix column_span_basis(const Matrix &a, double eps = kRankEpsilon);

// Orthonormal basis of the orthogonal complement of span(a) in R^ambient.
// `a` may have zero columns, in which case the identity is returned.
Matrix orthogonal_complement(const Matrix &a, Eigen::Index ambient, double eps = kRankEpsilon);

// `count` orthonormal vectors spanning a random subspace of span(basis).
// The mixing draws from `rng` so the result is in general position inside the
// subspace. Throws std::domain_error when count > basis.cols().
Matrix generic_subspace(const Matrix &basis, Eigen::Index count, std::mt19937_64 &rng);

// Columns scaled to unit Euclidean norm; zero columns are left as is.
Matrix normalize_columns(Matrix a);

// max |<u_a, c_b>| / (|u_a| |c_b|) over column pairs; zero columns are skipped.
double max_normalized_inner(const Matrix &u, const Matrix &c);

// Largest singular value (0 for empty input).
double spectral_norm(const Matrix &a);

// [a | b]
Matrix hcat(const Matrix &a, const Matrix &b);

} // namespace uldl::linalg
