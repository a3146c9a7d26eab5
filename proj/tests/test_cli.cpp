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

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uldl/cli/commands.hpp"

using namespace uldl;
using namespace uldl::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    std::vector<json> records() const
    {
        std::vector<json> v;
        std::istringstream in(out);
        for (std::string line; std::getline(in, line);)
            v.push_back(json::parse(line));
        return v;
    }

    json last() const { return records().back(); }
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "uldl");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Every "p/q" field is in lowest terms and its _decimal partner is the 6-place half-up value.
void check_rationals(const json &rec)
{
    for (const auto &[key, value] : rec.items()) {
        const std::string dec_key = key + "_decimal";
        if (!rec.contains(dec_key))
            continue;
        const std::string text = value.get<std::string>();
        const auto slash = text.find('/');
        const std::int64_t p = std::stoll(text.substr(0, slash));
        const std::int64_t q = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
        CHECK(q > 0);
        CHECK(std::gcd(p, q) == (p == 0 ? q : 1));
        // round(p/q * 1e6) half-up for non-negative p
        const std::int64_t micro = (2 * p * 1000000 + q) / (2 * q);
        CHECK(rec[dec_key].get<double>() == doctest::Approx(static_cast<double>(micro) / 1e6).epsilon(1e-12));
    }
}

} // namespace

TEST_CASE("dof")
{
    auto r = invoke({"dof", "2", "3", "3", "2"});
    REQUIRE(r.code == kExitOk);
    auto rec = r.last();
    CHECK(rec["record"] == "dof");
    CHECK(rec["sum_dof"] == "8/3");
    CHECK(rec["sum_dof_decimal"].get<double>() == 2.666667);
    CHECK(rec["mimo_ic_upper"] == "3");
    CHECK(rec["conventional_upper"] == "2");
    CHECK(rec["lp_scheme1"] == "8/3");
    CHECK(rec["lp_scheme1_lambda1"] == "2/3");
    CHECK(rec["lp_scheme2"] == "2");
    CHECK(rec["regimes"].get<std::string>().find('5') != std::string::npos);
    check_rationals(rec);

    rec = invoke({"dof", "1", "1", "1", "1"}).last();
    for (const char *k : {"sum_dof", "mimo_ic_upper", "single_cell_lower", "conventional_upper", "lp_scheme1", "lp_scheme2"})
        CHECK(rec[k] == "1");

    rec = invoke({"dof", "2", "6", "3", "4"}).last();
    CHECK(rec["sum_dof"] == rec["lp_scheme1"]);
    CHECK(rec["lp_max_equals_sum_dof"] == true);
}

TEST_CASE("gain")
{
    CHECK(invoke({"gain", "2"}).last()["delta_gain"] == "0.1250");
    CHECK(invoke({"gain", "1"}).last()["delta_gain"] == "0.0000");
    const auto rec = invoke({"gain", "8"}).last();
    CHECK(rec["delta_gain"] == "0.2598");
    CHECK(rec["fraction"] == "133/512");
    const auto w = invoke({"gain", "3", "--witness", "4"}).records();
    REQUIRE(w.size() == 5);
    CHECK(w[0]["record"] == "gain");
    for (size_t i = 1; i < w.size(); ++i) {
        CHECK(w[i]["record"] == "gain_witness");
        check_rationals(w[i]);
    }
}

TEST_CASE("curve")
{
    const auto r = invoke({"curve", "--n", "5", "--from", "1", "--to", "10", "--json"});
    REQUIRE(r.code == kExitOk);
    const auto rows = r.records();
    REQUIRE(rows.size() == 10);
    CHECK(rows[1]["sum_dof"] == "16/5");
    CHECK(rows[4]["sum_dof"] == "5");
    CHECK(rows[6]["sum_dof"] == "45/7");
    CHECK(rows[1]["single_cell_lower"] == "2");
    const auto csv = invoke({"curve", "--n", "5", "--from", "2", "--to", "3"});
    CHECK(csv.out.rfind("record,M,N,sum_dof,sum_dof_decimal,mimo_ic_upper", 0) == 0);
    CHECK(csv.out.find('\r') == std::string::npos);
    const auto gain = invoke({"curve", "--mode", "gain", "--from", "2", "--to", "2", "--json"}).last();
    CHECK(gain["gain"] == "6/5");
}

TEST_CASE("table2")
{
    auto r = invoke({"table2", "4"});
    REQUIRE(r.code == kExitOk);
    auto recs = r.records();
    REQUIRE(recs.size() == 257);
    for (size_t i = 0; i + 1 < recs.size(); ++i)
        CHECK(recs[i]["agree"] == true);
    CHECK(recs.back()["rows"] == 256);
    CHECK(recs.back()["disagreements"] == 0);

    r = invoke({"table2", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.records().size() == 2);

    recs = invoke({"table2", "3"}).records();
    bool found = false;
    for (const auto &rec : recs)
        if (rec.value("m1", 0) == 2 && rec["m2"] == 3 && rec["n1"] == 3 && rec["n2"] == 2) {
            found = true;
            CHECK(rec["d1"] == "8/3");
            CHECK(rec["d2"] == "2");
            CHECK(rec["dmax"] == "8/3");
        }
    CHECK(found);
}

TEST_CASE("simulate" * doctest::timeout(60))
{
    auto r = invoke({"simulate", "1", "2", "2", "1", "--t", "1", "--scheme", "1", "--seeds", "100"});
    REQUIRE(r.code == kExitOk);
    auto s = r.last();
    CHECK(s["record"] == "simulate_summary");
    CHECK(s["pass_fraction"].get<double>() >= 0.99);
    CHECK(s["achieved_dof"] == "3/8");
    CHECK(r.records().size() == 101);

    s = invoke({"simulate", "--simple", "--n1", "3", "--seeds", "100"}).last();
    CHECK(s["achieved_dof"] == "5/3");
    CHECK(s["pass_fraction"].get<double>() >= 0.99);

    s = invoke({"simulate", "1", "2", "2", "1", "--t", "3", "--seeds", "3"}).last();
    CHECK(s["achieved_dof"] == "27/32");

    // default scheme follows the antenna order
    const auto first = invoke({"simulate", "2", "1", "1", "2"}).records().front();
    CHECK(first["scheme"] == 2);
    CHECK(first["lambda1"] == "1/2");
}

TEST_CASE("simulate errors map to exit codes")
{
    auto r = invoke({"simulate", "1", "2", "2", "1", "--alloc", "1,0"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("N1*lambda1 <= M1") != std::string::npos);
    r = invoke({"simulate", "1", "2", "2", "3", "--t", "4"});
    CHECK(r.code == kExitSizeCap);
    CHECK(r.err.find("4096") != std::string::npos);
    CHECK(invoke({"simulate", "1", "2", "2"}).code == kExitUsage);
    CHECK(invoke({"simulate", "--simple", "--n1", "2", "1", "2", "2", "1"}).code == kExitUsage);
    CHECK(invoke({"simulate", "1", "2", "2", "1", "--scheme", "3"}).code == kExitUsage);
}

TEST_CASE("delayed" * doctest::timeout(60))
{
    const auto r = invoke({"delayed", "--seeds", "1000"});
    REQUIRE(r.code == kExitOk);
    const auto s = r.last();
    CHECK(s["pass_fraction"].get<double>() >= 0.99);
    CHECK(s["dof"] == "5/4");
    CHECK(s["causality_ok_all"] == true);
    CHECK(s["max_abs_error_p99"].get<double>() < 1e-6);
    CHECK(invoke({"delayed", "--seeds", "1"}).out == invoke({"delayed", "--seeds", "1"}).out);
    CHECK(invoke({"delayed", "--seeds", "1", "--seed", "9"}).out != invoke({"delayed", "--seeds", "1"}).out);
}

TEST_CASE("hotspot")
{
    auto rec = invoke({"hotspot", "2", "2", "6", "3", "4"}).last();
    CHECK(rec["conventional_upper"] == "4");
    CHECK(rec["uplink_downlink_lower"] == "14/3");
    CHECK(rec["lambda1"] == "1/3");
    CHECK(invoke({"hotspot", "1", "2", "3", "3", "2"}).last()["uplink_downlink_lower"] == "8/3");
    rec = invoke({"hotspot", "1", "1", "1", "1", "1"}).last();
    CHECK(rec["conventional_upper"] == "1");
    CHECK(rec["uplink_downlink_lower"] == "1");
    CHECK(invoke({"hotspot", "0", "1", "1", "1", "1"}).code == kExitUsage);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"dof", "0", "1", "1", "1"}).code == kExitUsage);
    CHECK(invoke({"dof", "1", "1", "1"}).code == kExitUsage);
    CHECK(invoke({"dof", "a", "1", "1", "1"}).code == kExitUsage);
    CHECK(invoke({"gain", "0"}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"dof", "1", "1", "1", "1", "--csv", "--json"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("csv output")
{
    const auto r = invoke({"--csv", "hotspot", "2", "2", "6", "3", "4"});
    CHECK(r.out ==
          "record,l,m1,m2,n1,n2,conventional_upper,conventional_upper_decimal,uplink_downlink_lower,"
          "uplink_downlink_lower_decimal,lambda1,lambda2\n"
          "hotspot,2,2,6,3,4,4,4.0,14/3,4.666667,1/3,2/3\n");
    const auto sim = invoke({"simulate", "--simple", "--n1", "2", "--seeds", "2", "--csv"});
    std::istringstream in(sim.out);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    REQUIRE(lines.size() == 5); // header, 2 rows, summary header, summary
    CHECK(lines[3].rfind("record,seeds,passed", 0) == 0);
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("identical arguments give identical output")
{
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"simulate", "1", "2", "2", "1", "--t", "2", "--seeds", "3", "--seed", "4"},
          std::vector<std::string>{"gain", "5", "--witness", "3"}, std::vector<std::string>{"table2", "2"}})
        CHECK(invoke(args).out == invoke(args).out);
}
