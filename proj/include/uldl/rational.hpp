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
#include <string>

#include <boost/rational.hpp>

// Under C++20 the mixed rational/integer operator== of Boost 1.74 is found in
// reversed form and recurses forever. Exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t> &a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int a, const rational<std::int64_t> &b) { return b == rational<std::int64_t>(a); }
inline bool operator==(const rational<std::int64_t> &a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t a, const rational<std::int64_t> &b) { return b == rational<std::int64_t>(a); }
} // namespace boost

namespace uldl {

// Exact rational. boost keeps it in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational &r);

// Fixed-point rendering with `places` decimals, rounding half away from zero
// (half-up for the non-negative values this project produces).
std::string to_decimal_string(const Rational &r, int places);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string &text);

inline double to_double(const Rational &r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace uldl
