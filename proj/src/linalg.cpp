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

#include "uldl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace uldl::linalg {

namespace {

double rank_threshold(const Eigen::VectorXd &sv, Eigen::Index rows, Eigen::Index cols, double eps)
{
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    return eps * sigma_max * static_cast<double>(std::max(rows, cols));
}

Eigen::Index count_above(const Eigen::VectorXd &sv, double threshold)
{
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold)
            ++r;
    return r;
}

} // namespace

Eigen::Index numerical_rank(const Matrix &a, double eps)
{
    if (a.size() == 0)
        return 0;
    Eigen::BDCSVD<Matrix> svd(a);
    const auto &sv = svd.singularValues();
    return count_above(sv, rank_threshold(sv, a.rows(), a.cols(), eps));
}

Matrix column_span_basis(const Matrix &a, double eps)
{
    if (a.size() == 0)
        return Matrix(a.rows(), 0);
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    const Eigen::Index r = count_above(sv, rank_threshold(sv, a.rows(), a.cols(), eps));
    return svd.matrixU().leftCols(r);
}

Matrix orthogonal_complement(const Matrix &a, Eigen::Index ambient, double eps)
{
    if (a.cols() == 0)
        return Matrix::Identity(ambient, ambient);
    if (a.rows() != ambient)
        throw std::invalid_argument("orthogonal_complement: row count does not match ambient dimension");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullU);
    const auto &sv = svd.singularValues();
    const Eigen::Index r = count_above(sv, rank_threshold(sv, a.rows(), a.cols(), eps));
    return svd.matrixU().rightCols(ambient - r);
}

Matrix generic_subspace(const Matrix &basis, Eigen::Index count, std::mt19937_64 &rng)
{
    if (count > basis.cols())
        throw std::domain_error("subspace of dimension " + std::to_string(basis.cols()) + " cannot hold " +
                                std::to_string(count) + " orthonormal vectors");
    if (count == 0)
        return Matrix(basis.rows(), 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix mix(basis.cols(), count);
    for (Eigen::Index c = 0; c < count; ++c)
        for (Eigen::Index r = 0; r < basis.cols(); ++r)
            mix(r, c) = normal(rng);
    Eigen::HouseholderQR<Matrix> qr(basis * mix);
    return qr.householderQ() * Matrix::Identity(basis.rows(), count);
}

Matrix normalize_columns(Matrix a)
{
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        const double n = a.col(c).norm();
        if (n > 0)
            a.col(c) /= n;
    }
    return a;
}

double max_normalized_inner(const Matrix &u, const Matrix &c)
{
    if (u.cols() == 0 || c.cols() == 0)
        return 0.0;
    const Matrix un = normalize_columns(u);
    const Matrix cn = normalize_columns(c);
    return (un.transpose() * cn).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix &a)
{
    if (a.size() == 0)
        return 0.0;
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

Matrix hcat(const Matrix &a, const Matrix &b)
{
    if (a.cols() == 0)
        return b;
    if (b.cols() == 0)
        return a;
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat: row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

} // namespace uldl::linalg
