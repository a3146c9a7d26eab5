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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

#include "uldl/cell_config.hpp"
#include "uldl/lp_corner.hpp"
#include "uldl/rational.hpp"

namespace uldl::testing {

// Reduced fraction as a plain integer pair; keeps oracles away from boost.
struct Frac {
    std::int64_t num;
    std::int64_t den;
};

inline Frac reduce(std::int64_t num, std::int64_t den)
{
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

inline bool same(const Rational &r, Frac f) { return r.numerator() == f.num && r.denominator() == f.den; }

// a/b < c/d for positive denominators
inline bool less(Frac x, Frac y) { return x.num * y.den < y.num * x.den; }
inline Frac fmin(Frac x, Frac y) { return less(y, x) ? y : x; }
inline Frac fmax(Frac x, Frac y) { return less(x, y) ? y : x; }

// Program with l1 + l2 <= 1, N1 l1 <= M1, N1 l1 + N2 l2 <= M2, solved by
// substitution: for fixed l1 the best l2 gives min(N2 + (N1 - N2) l1, M2),
// increasing in l1 only when N1 >= N2.
inline Frac oracle_scheme1(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2)
{
    if (n1 < n2)
        return reduce(std::min(n2, m2), 1);
    // u = min(1, M1/N1, M2/N1)
    const Frac u = fmin(Frac{1, 1}, reduce(std::min(m1, m2), n1));
    const Frac reach = reduce(n2 * u.den + (n1 - n2) * u.num, u.den);
    return fmin(reach, Frac{m2, 1});
}

// Scheme 2 is scheme 1 with the cells' roles exchanged.
inline Frac oracle_scheme2(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2)
{
    return oracle_scheme1(m2, m1, n2, n1);
}

inline Frac oracle_sum_dof(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2)
{
    const std::int64_t big_n = std::max(n1, n2);
    const std::int64_t num =
        n1 * n2 + std::min(m1, n1) * std::max<std::int64_t>(n1 - n2, 0) + std::min(m2, n2) * std::max<std::int64_t>(n2 - n1, 0);
    Frac d = reduce(num, big_n);
    for (std::int64_t v : {m1 + n2, m2 + n1, std::max(m1, m2), big_n})
        d = fmin(d, Frac{v, 1});
    return d;
}

inline std::int64_t oracle_conventional(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2)
{
    return std::min({m1 + m2, n1 + n2, std::max(m1, n2), std::max(m2, n1)});
}

// Hand-rolled generators.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    CellConfig config(std::int64_t cap)
    {
        return {integer(1, cap), integer(1, cap), integer(1, cap), integer(1, cap)};
    }

    // p/q with q in [1, max_den], value in [0, 1]
    Rational unit_rational(std::int64_t max_den)
    {
        const std::int64_t q = integer(1, max_den);
        return Rational(integer(0, q), q);
    }

    StreamAllocation allocation(std::int64_t max_den) { return {unit_rational(max_den), unit_rational(max_den)}; }

    std::mt19937_64 &engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

} // namespace uldl::testing
