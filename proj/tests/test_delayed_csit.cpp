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

#include <cmath>

#include "uldl/delayed_csit.hpp"
#include "uldl/dof_core.hpp"

using namespace uldl;
using namespace uldl::delayed;

TEST_CASE("random symbols decode exactly")
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto r = run_delayed_scheme(s);
        CHECK(r.causality_ok);
        CHECK(r.max_abs_error < 1e-6);
        CHECK(r.b1_cancellation < 1e-9);
        CHECK(r.passed());
    }
}

TEST_CASE("zero symbols decode to zero")
{
    const auto r = run_delayed_scheme(7, std::array<double, 5>{0, 0, 0, 0, 0});
    for (double v : r.decoded_alpha)
        CHECK(v == 0.0);
    for (double v : r.decoded_beta)
        CHECK(v == 0.0);
    CHECK(r.max_abs_error == 0.0);
}

TEST_CASE("given symbols are the ones recovered")
{
    const std::array<double, 5> sym{1.5, -2.0, 0.25, 3.0, -0.75};
    const auto r = run_delayed_scheme(3, sym);
    CHECK(r.symbols_sent == sym);
    CHECK(r.decoded_alpha[0] == doctest::Approx(1.5));
    CHECK(r.decoded_alpha[1] == doctest::Approx(-2.0));
    CHECK(r.decoded_alpha[2] == doctest::Approx(0.25));
    CHECK(r.decoded_beta[0] == doctest::Approx(3.0));
    CHECK(r.decoded_beta[1] == doctest::Approx(-0.75));
}

TEST_CASE("1000 seeds" * doctest::timeout(30))
{
    int ok = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto r = run_delayed_scheme(s);
        ok += r.passed() ? 1 : 0;
        CHECK(r.causality_ok);
        CHECK(r.streams == 5);
        CHECK(r.slots == 4);
        CHECK(r.dof == rat(5, 4));
    }
    CHECK(ok >= 990);
}

TEST_CASE("every transmit coefficient uses only earlier slots")
{
    const auto r = run_delayed_scheme(11);
    REQUIRE_FALSE(r.record.empty());
    bool saw_slot4 = false;
    for (const auto &c : r.record) {
        CHECK(c.slot >= 1);
        CHECK(c.slot <= 4);
        CHECK((c.coefficient.slots >> c.slot) == 0u);
        if (c.slot == 4) {
            saw_slot4 = true;
            CHECK(c.coefficient.slots != 0u);
        }
    }
    CHECK(saw_slot4);
}

TEST_CASE("the audit flags a coefficient that looks ahead")
{
    std::vector<TransmitCoefficient> rec{{2, "user", "weight", Tagged::channel(0.5, 1)}};
    CHECK(causality_holds(rec));
    rec.push_back({3, "BS", "weight", Tagged::channel(1.0, 2) * Tagged::channel(2.0, 3)});
    CHECK_FALSE(causality_holds(rec));
    CHECK_FALSE(causality_holds({{1, "user", "weight", Tagged::channel(1.0, 1)}}));
}

TEST_CASE("tags combine through arithmetic")
{
    const Tagged a = Tagged::channel(2.0, 1), b = Tagged::channel(4.0, 3);
    CHECK((a + b).slots == 0b1010u);
    CHECK((a / b).value == 0.5);
    CHECK((a - Tagged::constant(1.0)).slots == 0b10u);
}

TEST_CASE("trace draws are reproducible and keep the pivot away from zero")
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        const auto t = draw_trace(s);
        CHECK(std::abs(t.g2[2]) >= kMinPivot);
    }
    CHECK(draw_trace(5).h_vec[3] == draw_trace(5).h_vec[3]);
    CHECK(run_delayed_scheme(5).max_abs_error == run_delayed_scheme(5).max_abs_error);
}

TEST_CASE("comparison against instantaneous and conventional operation")
{
    const CellConfig c{1, 2, 2, 1};
    CHECK(conventional_upper(c) == 1);
    CHECK(conventional_upper(c) < rat(5, 4));
    CHECK(sum_dof(c) == rat(3, 2));
    CHECK(sum_dof(c) >= rat(5, 4));
}
