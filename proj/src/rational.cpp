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

#include "uldl/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace uldl {

std::string to_fraction_string(const Rational &r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational &r, int places)
{
    if (places < 0 || places > 12)
        throw std::invalid_argument("decimal places must be in [0, 12]");

    using Wide = __int128;
    Wide scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;

    const bool negative = r.numerator() < 0;
    const Wide num = negative ? -static_cast<Wide>(r.numerator()) : static_cast<Wide>(r.numerator());
    const Wide den = r.denominator();

    // round(num * scale / den) with ties away from zero
    const Wide scaled = (2 * num * scale + den) / (2 * den);
    const Wide whole = scaled / scale;
    Wide frac = scaled % scale;

    std::string out = negative && scaled != 0 ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    if (places > 0) {
        std::string digits(static_cast<size_t>(places), '0');
        for (int i = places - 1; i >= 0; --i) {
            digits[static_cast<size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
            frac /= 10;
        }
        out += "." + digits;
    }
    return out;
}

Rational parse_rational(const std::string &text)
{
    auto parse_int = [&](const std::string &s) -> std::int64_t {
        if (s.empty())
            throw std::invalid_argument("malformed rational: '" + text + "'");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed rational: '" + text + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("malformed rational: '" + text + "'");
        return v;
    };

    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace uldl
