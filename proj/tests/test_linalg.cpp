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

#include <doctest.h>

#include "support.hpp"
#include "uldl/linalg.hpp"

using namespace uldl::linalg;

namespace {

Matrix random_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols)
{
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = n(rng);
    return m;
}

} // namespace

TEST_CASE("rank of constructed low-rank products")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto rows = static_cast<Eigen::Index>(rng() % 30 + 1);
        const auto cols = static_cast<Eigen::Index>(rng() % 30 + 1);
        const auto r = static_cast<Eigen::Index>(rng() % (std::min(rows, cols) + 1));
        const Matrix a = random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
        CHECK(numerical_rank(a) == r);
    }
    CHECK(numerical_rank(Matrix(0, 3)) == 0);
    CHECK(numerical_rank(Matrix::Zero(4, 4)) == 0);
}

TEST_CASE("complement is orthonormal and orthogonal")
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        const auto n = static_cast<Eigen::Index>(rng() % 20 + 2);
        const auto r = static_cast<Eigen::Index>(rng() % n);
        const Matrix a = random_matrix(rng, n, r) * random_matrix(rng, r, r + 2);
        const Matrix c = orthogonal_complement(a, n);
        CHECK(c.cols() == n - r);
        CHECK((c.transpose() * c - Matrix::Identity(c.cols(), c.cols())).norm() < 1e-10);
        CHECK(max_normalized_inner(c, a) < 1e-9);
        const Matrix span = column_span_basis(a);
        CHECK(span.cols() == r);
        CHECK(numerical_rank(hcat(span, c)) == n);
    }
    CHECK(orthogonal_complement(Matrix(5, 0), 5).isApprox(Matrix::Identity(5, 5)));
}

TEST_CASE("generic subspace stays inside the basis span")
{
    std::mt19937_64 rng(5);
    const Matrix basis = orthogonal_complement(random_matrix(rng, 12, 4), 12);
    const Matrix g = generic_subspace(basis, 5, rng);
    CHECK(g.cols() == 5);
    CHECK((g.transpose() * g - Matrix::Identity(5, 5)).norm() < 1e-10);
    // projecting onto span(basis) leaves it unchanged
    CHECK((basis * (basis.transpose() * g) - g).norm() < 1e-10);
    CHECK(generic_subspace(basis, 0, rng).cols() == 0);
    CHECK_THROWS_AS(generic_subspace(basis, 9, rng), std::domain_error);
}

TEST_CASE("helpers")
{
    Matrix a(2, 2);
    a << 3, 0, 4, 0;
    const Matrix n = normalize_columns(a);
    CHECK(n(0, 0) == doctest::Approx(0.6));
    CHECK(n(1, 0) == doctest::Approx(0.8));
    CHECK(n(0, 1) == 0.0);
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 1, -7, 2;
    CHECK(spectral_norm(d) == doctest::Approx(7.0));
    CHECK(spectral_norm(Matrix(0, 0)) == 0.0);
    CHECK(hcat(a, Matrix(2, 0)).cols() == 2);
}
