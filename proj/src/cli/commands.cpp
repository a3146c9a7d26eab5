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

#include "uldl/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "uldl/align_sim.hpp"
#include "uldl/delayed_csit.hpp"
#include "uldl/dof_core.hpp"
#include "uldl/gain_scan.hpp"

namespace uldl::cli {

namespace {

std::string regime_list(const std::vector<RegimeRow> &rows)
{
    std::string out;
    for (const auto &r : rows)
        out += (out.empty() ? "" : ";") + std::to_string(r.index);
    return out;
}

void add_solution(Record &rec, const std::string &prefix, const LpSolution &s)
{
    rec.rational(prefix, s.value);
    rec.set(prefix + "_lambda1", to_fraction_string(s.argmax.lambda1));
    rec.set(prefix + "_lambda2", to_fraction_string(s.argmax.lambda2));
}

double percentile(std::vector<double> v, double p)
{
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const auto idx = static_cast<size_t>(std::ceil(p * static_cast<double>(v.size()))) - 1;
    return v[std::min(idx, v.size() - 1)];
}

} // namespace

int cmd_dof(const CellConfig &cfg, RecordWriter &out)
{
    cfg.validate();
    const auto lp1 = solve_scheme1(cfg);
    const auto lp2 = solve_scheme2(cfg);
    const Rational d = sum_dof(cfg);
    Record rec("dof");
    rec.config(cfg);
    rec.rational("sum_dof", d);
    rec.rational("mimo_ic_upper", mimo_ic_upper(cfg));
    rec.rational("single_cell_lower", single_cell_lower(cfg));
    rec.rational("conventional_upper", conventional_upper(cfg));
    rec.set("regimes", regime_list(classify_regime(cfg)));
    add_solution(rec, "lp_scheme1", lp1);
    add_solution(rec, "lp_scheme2", lp2);
    rec.set("lp_max_equals_sum_dof", std::max(lp1.value, lp2.value) == d);
    out.write(rec);
    return kExitOk;
}

int cmd_gain(std::int64_t lambda_cap, std::size_t witnesses, RecordWriter &out)
{
    const auto res = delta_gain(lambda_cap);
    Record rec("gain");
    rec.set("lambda_cap", res.lambda_cap);
    rec.set("gain_count", res.gain_count);
    rec.set("total", res.total);
    rec.rational("fraction", res.fraction());
    rec.set("delta_gain", res.rendered());
    out.write(rec);
    if (witnesses > 0) {
        for (const auto &w : gain_region(lambda_cap, witnesses)) {
            Record wr("gain_witness");
            wr.config(w.cfg);
            wr.rational("sum_dof", w.d_sigma);
            wr.rational("conventional_upper", w.d_upper);
            out.write(wr);
        }
    }
    return kExitOk;
}

int cmd_curve(CurveMode mode, std::int64_t n, std::int64_t m_from, std::int64_t m_to, RecordWriter &out)
{
    if (n < 1 || m_from < 1 || m_to < m_from)
        throw std::invalid_argument("curve needs n >= 1 and 1 <= from <= to");
    for (std::int64_t m = m_from; m <= m_to; ++m) {
        const CellConfig cfg{m, n, n, m};
        Record rec("curve");
        rec.set("M", m);
        rec.set("N", n);
        rec.rational("sum_dof", sum_dof(cfg));
        if (mode == CurveMode::Bounds) {
            rec.rational("mimo_ic_upper", mimo_ic_upper(cfg));
            rec.rational("single_cell_lower", single_cell_lower(cfg));
        } else {
            rec.rational("conventional_upper", conventional_upper(cfg));
            rec.rational("gain", std::max(sum_dof(cfg) - conventional_upper(cfg), Rational(0)));
        }
        out.write(rec);
    }
    return kExitOk;
}

int cmd_table2(std::int64_t lambda_cap, RecordWriter &out)
{
    if (lambda_cap < 1)
        throw std::invalid_argument("lambda_cap must be >= 1");
    std::int64_t rows = 0;
    std::int64_t disagreements = 0;
    for (std::int64_t m1 = 1; m1 <= lambda_cap; ++m1)
        for (std::int64_t m2 = 1; m2 <= lambda_cap; ++m2)
            for (std::int64_t n1 = 1; n1 <= lambda_cap; ++n1)
                for (std::int64_t n2 = 1; n2 <= lambda_cap; ++n2) {
                    const CellConfig cfg{m1, m2, n1, n2};
                    const auto regimes = classify_regime(cfg);
                    const auto &first = regimes.front();
                    const RegimeValues closed{evaluate(first.d1, cfg), evaluate(first.d2, cfg),
                                              evaluate(first.dmax, cfg)};
                    bool overlap_ok = true;
                    for (const auto &r : regimes)
                        overlap_ok = overlap_ok && RegimeValues{evaluate(r.d1, cfg), evaluate(r.d2, cfg),
                                                                evaluate(r.dmax, cfg)} == closed;
                    const auto lp1 = solve_scheme1(cfg);
                    const auto lp2 = solve_scheme2(cfg);
                    const Rational lp_max = std::max(lp1.value, lp2.value);
                    const Rational d = sum_dof(cfg);
                    const bool agree = overlap_ok && closed.d1 == lp1.value && closed.d2 == lp2.value &&
                                       closed.dmax == lp_max && lp_max == d;
                    ++rows;
                    disagreements += agree ? 0 : 1;

                    Record rec("table2");
                    rec.config(cfg);
                    rec.set("regimes", regime_list(regimes));
                    rec.rational("d1", closed.d1);
                    rec.rational("d2", closed.d2);
                    rec.rational("dmax", closed.dmax);
                    rec.rational("lp_scheme1", lp1.value);
                    rec.rational("lp_scheme2", lp2.value);
                    rec.rational("sum_dof", d);
                    rec.set("agree", agree);
                    out.write(rec);
                }
    Record summary("table2_summary");
    summary.set("lambda_cap", lambda_cap);
    summary.set("rows", rows);
    summary.set("disagreements", disagreements);
    out.write(summary);
    return disagreements == 0 ? kExitOk : kExitInconsistent;
}

int cmd_simulate(const SimulateOptions &opts, RecordWriter &out)
{
    if (opts.seeds < 1)
        throw std::invalid_argument("--seeds must be >= 1");

    sim::SimPlan plan;
    if (!opts.simple) {
        if (!opts.cfg)
            throw std::invalid_argument("simulate needs m1 m2 n1 n2 or --simple");
        const CellConfig cfg = *opts.cfg;
        cfg.validate();
        const Scheme scheme =
            opts.scheme.value_or(cfg.m1 <= cfg.m2 ? Scheme::InterAndIntraNulling : Scheme::IntraNullingOnly);
        const StreamAllocation alloc = opts.alloc.value_or(solve_scheme(scheme, cfg).argmax);
        plan = sim::make_plan(cfg, opts.t, alloc, scheme);
    } else if (opts.simple_n1 < 1) {
        throw std::invalid_argument("--n1 must be >= 1");
    }

    std::int64_t passed = 0;
    Rational dof;
    for (std::int64_t k = 0; k < opts.seeds; ++k) {
        const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(k);
        const sim::SimReport r = opts.simple ? sim::run_simple_scheme(opts.simple_n1, seed) : sim::run_scheme(plan, seed);
        passed += r.passed() ? 1 : 0;
        dof = r.achieved_dof;

        const auto &p = r.plan;
        const auto [lo, hi] = std::minmax_element(r.alignment_rank_per_block.begin(), r.alignment_rank_per_block.end());
        Record rec("simulate");
        rec.config(p.cfg);
        rec.set("construction", r.construction);
        rec.set("scheme", scheme_number(p.scheme));
        rec.set("t", p.t);
        rec.set("lambda1", to_fraction_string(p.alloc.lambda1));
        rec.set("lambda2", to_fraction_string(p.alloc.lambda2));
        rec.set("seed", seed);
        rec.set("slots", p.slots);
        rec.set("replication", p.replication);
        rec.set("alpha_streams", p.alpha_streams);
        rec.set("beta_streams", p.beta_streams);
        rec.set("alignment_rank", r.alignment_rank);
        rec.set("alignment_rank_block_min", *lo);
        rec.set("alignment_rank_block_max", *hi);
        rec.set("alignment_bounds_ok", r.alignment_bounds_ok);
        rec.set("in_orthogonality_max_abs", r.in_orthogonality_max_abs);
        rec.set("bs_alpha_rank", r.bs_alpha_rank);
        rec.set("bs_alpha_leakage", r.bs_alpha_leakage);
        rec.set("bs_alpha_decodable", r.bs_alpha_decodable);
        rec.set("beta_users_decodable",
                std::all_of(r.beta_users_decodable.begin(), r.beta_users_decodable.end(), [](bool b) { return b; }));
        rec.set("beta_intra_leakage", r.beta_intra_leakage);
        rec.rational("achieved_dof", r.achieved_dof);
        rec.set("passed", r.passed());
        rec.set("failure", r.failure);
        out.write(rec);
    }
    Record summary("simulate_summary");
    summary.set("seeds", opts.seeds);
    summary.set("passed", passed);
    summary.set("pass_fraction", static_cast<double>(passed) / static_cast<double>(opts.seeds));
    summary.rational("achieved_dof", dof);
    out.write(summary);
    return kExitOk;
}

int cmd_delayed(std::int64_t seeds, std::uint64_t seed, RecordWriter &out)
{
    if (seeds < 1)
        throw std::invalid_argument("--seeds must be >= 1");
    std::int64_t passed = 0;
    bool causality_all = true;
    std::vector<double> errors;
    for (std::int64_t k = 0; k < seeds; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        const auto r = delayed::run_delayed_scheme(s);
        passed += r.passed() ? 1 : 0;
        causality_all = causality_all && r.causality_ok;
        errors.push_back(r.max_abs_error);

        Record rec("delayed");
        rec.set("seed", s);
        rec.set("max_abs_error", r.max_abs_error);
        rec.set("causality_ok", r.causality_ok);
        rec.set("b1_cancellation", r.b1_cancellation);
        rec.set("condition_alpha", r.condition_alpha);
        rec.set("condition_beta", r.condition_beta);
        rec.set("ill_conditioned", r.ill_conditioned);
        rec.set("streams", r.streams);
        rec.set("slots", r.slots);
        rec.rational("dof", r.dof);
        rec.set("passed", r.passed());
        out.write(rec);
    }
    Record summary("delayed_summary");
    summary.set("seeds", seeds);
    summary.set("passed", passed);
    summary.set("pass_fraction", static_cast<double>(passed) / static_cast<double>(seeds));
    summary.set("causality_ok_all", causality_all);
    summary.set("max_abs_error_p50", percentile(errors, 0.50));
    summary.set("max_abs_error_p99", percentile(errors, 0.99));
    summary.set("max_abs_error_max", percentile(errors, 1.0));
    summary.rational("dof", Rational(delayed::kStreams, delayed::kSlots));
    out.write(summary);
    return kExitOk;
}

int cmd_hotspot(std::int64_t hotspots, const CellConfig &cfg, RecordWriter &out)
{
    const auto b = hotspot_bounds(hotspots, cfg);
    const auto lp = solve_hotspot(hotspots, cfg);
    Record rec("hotspot");
    rec.set("l", hotspots);
    rec.config(cfg);
    rec.rational("conventional_upper", b.conventional_upper);
    rec.rational("uplink_downlink_lower", b.uplink_downlink_lower);
    rec.set("lambda1", to_fraction_string(lp.argmax.lambda1));
    rec.set("lambda2", to_fraction_string(lp.argmax.lambda2));
    out.write(rec);
    return kExitOk;
}

namespace {

CellConfig config_from(const std::vector<std::int64_t> &v)
{
    if (v.size() != 4)
        throw std::invalid_argument("expected four values m1 m2 n1 n2");
    return make_config(v[0], v[1], v[2], v[3]);
}

StreamAllocation parse_alloc(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--alloc expects 'lambda1,lambda2'");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Degrees of freedom of uplink-downlink two-cell networks", "uldl"};
    app.require_subcommand(1);
    app.fallthrough();
    bool csv = false;
    bool json = false;
    app.add_flag("--csv", csv, "CSV output (header row, LF line endings)");
    app.add_flag("--json", json, "JSON-lines output");

    std::vector<std::int64_t> cfg_args;
    std::int64_t cap = 1;
    std::size_t witnesses = 0;
    std::int64_t n = 5, from = 1, to = 10, hotspots = 1;
    std::string mode = "bounds";
    SimulateOptions sim_opts;
    int scheme = 0;
    std::string alloc;
    std::int64_t seeds = 1;
    std::uint64_t seed = 0;

    auto *dof = app.add_subcommand("dof", "Sum DoF, bounds, regimes and both programs");
    dof->add_option("config", cfg_args, "m1 m2 n1 n2")->expected(4)->required();

    auto *gain = app.add_subcommand("gain", "Share of [1,L]^4 with a strict gain");
    gain->add_option("lambda_cap", cap)->required()->check(CLI::Range(1, 1024));
    gain->add_option("--witness", witnesses, "List the first N strict-gain configs");

    auto *curve = app.add_subcommand("curve", "Sweep (M, N, N, M) over M");
    curve->add_option("--n", n)->check(CLI::PositiveNumber);
    curve->add_option("--from", from)->check(CLI::PositiveNumber);
    curve->add_option("--to", to)->check(CLI::PositiveNumber);
    curve->add_option("--mode", mode)->check(CLI::IsMember({"bounds", "gain"}));

    auto *table2 = app.add_subcommand("table2", "Regime closed forms against the programs");
    table2->add_option("lambda_cap", cap)->required()->check(CLI::Range(1, 1024));

    auto *simulate = app.add_subcommand("simulate", "Signal-space simulation of the constructions");
    simulate->add_option("config", cfg_args, "m1 m2 n1 n2")->expected(0, 4);
    simulate->add_flag("--simple", sim_opts.simple, "Exact N1-slot scheme for (1, 2, N1, 1)");
    simulate->add_option("--n1", sim_opts.simple_n1)->check(CLI::PositiveNumber);
    simulate->add_option("--t", sim_opts.t)->check(CLI::PositiveNumber);
    simulate->add_option("--scheme", scheme)->check(CLI::IsMember({1, 2}));
    simulate->add_option("--alloc", alloc, "lambda1,lambda2 as p/q values");

    auto *delayed = app.add_subcommand("delayed", "Four-slot delayed-CSIT scheme");

    for (auto *sub : {simulate, delayed}) {
        sub->add_option("--seeds", seeds)->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed);
    }

    auto *hotspot = app.add_subcommand("hotspot", "Bounds with L micro cells inside a macro cell");
    hotspot->add_option("l", hotspots)->required()->check(CLI::PositiveNumber);
    hotspot->add_option("config", cfg_args, "m1 m2 n1 n2")->expected(4)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (csv && json) {
        err << "error: --csv and --json are exclusive\n";
        return kExitUsage;
    }
    // curve is plot data and defaults to CSV
    const bool want_csv = csv || (curve->parsed() && !json);
    RecordWriter writer(out, want_csv ? Format::Csv : Format::JsonLines);

    try {
        if (dof->parsed())
            return cmd_dof(config_from(cfg_args), writer);
        if (gain->parsed())
            return cmd_gain(cap, witnesses, writer);
        if (curve->parsed())
            return cmd_curve(mode == "gain" ? CurveMode::Gain : CurveMode::Bounds, n, from, to, writer);
        if (table2->parsed()) {
            const int code = cmd_table2(cap, writer);
            if (code != kExitOk)
                err << "error: regime closed forms disagree with the programs\n";
            return code;
        }
        if (simulate->parsed()) {
            if (!sim_opts.simple)
                sim_opts.cfg = config_from(cfg_args);
            else if (!cfg_args.empty())
                throw std::invalid_argument("--simple takes no m1 m2 n1 n2");
            if (scheme != 0)
                sim_opts.scheme = scheme_from_number(scheme);
            if (!alloc.empty())
                sim_opts.alloc = parse_alloc(alloc);
            sim_opts.seeds = seeds;
            sim_opts.seed = seed;
            return cmd_simulate(sim_opts, writer);
        }
        if (delayed->parsed())
            return cmd_delayed(seeds, seed, writer);
        if (hotspot->parsed())
            return cmd_hotspot(hotspots, config_from(cfg_args), writer);
    } catch (const sim::SizeCapError &e) {
        err << "error: " << e.what() << '\n';
        return kExitSizeCap;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInconsistent;
    }
    return kExitUsage;
}

} // namespace uldl::cli
