// SPDX-License-Identifier: Apache-2.0
//
// fsdmt: finite-SNR diversity-multiplexing tradeoff toolkit
// Copyright (C) 2026 The fsdmt Authors
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

#include <cmath>
#include <limits>
#include <numbers>

#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>
#include <fsdmt/oracle.hpp>

#include "detail.hpp"
#include "fsdmt_app/sweep.hpp"

namespace fsdmt::app
{

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Preset
{
    int m;
    int n;
    double r;
    SnrRange snr;
    std::size_t trials;
};

std::vector<MuxGainDef> all_definitions(const ChannelModel& model)
{
    return {RawLog{}, offset_log_for(model), MeanCapacity{}};
}

std::vector<std::string> suffixed(const std::string& stem, const ChannelModel& model)
{
    std::vector<std::string> out;
    for (const auto& def : all_definitions(model))
        out.push_back(stem + "_" + std::string(mux_name(def)));
    return out;
}

// Evaluates f and turns regime errors into NaN.
template <class F>
double or_nan(F&& f)
{
    try
    {
        return f();
    }
    catch (const Error& e)
    {
        if (e.kind() != ErrorKind::regime)
            throw;
        return nan;
    }
}

double model_outage(const ChannelModel& model, SnrPoint g, double r, const MuxGainDef& def)
{
    return or_nan([&] { return std::exp(model_log_outage(model, g, r, def)); });
}

double model_d_prime(const ChannelModel& model, SnrPoint g, double r, const MuxGainDef& def)
{
    return or_nan([&] { return model_dmt_point(model, g, r, def).d_prime; });
}

std::vector<double> mc_curve(const ChannelModel& model, const std::vector<SnrPoint>& grid, double r,
                             const MuxGainDef& def, const Preset& p, const SweepRequest& req)
{
    SimConfig cfg{model, grid, MuxTarget{def, r}, req.trials_explicit ? req.trials : p.trials, req.seed, req.workers};
    std::vector<double> out;
    for (const auto& e : estimate_outage(cfg))
        out.push_back(e.skipped ? nan : e.p_hat);
    return out;
}

// Outage curves: model and Monte-Carlo for each definition, exact curves when an oracle exists.
SweepResult outage_figure(const Preset& p, const SweepRequest& req, bool with_exact)
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(p.m, p.n));
    const auto defs = all_definitions(model);
    const auto db = p.snr.db_values();
    const auto grid = detail::grid(db);

    SweepResult res;
    Table& t = res.table;
    t.columns = {"snr_db", "gamma"};
    for (auto& c : suffixed("p_model", model))
        t.columns.push_back(c);
    for (auto& c : suffixed("p_mc", model))
        t.columns.push_back(c);
    if (with_exact)
        for (auto& c : suffixed("p_exact", model))
            t.columns.push_back(c);
    t.columns.push_back("p_ref_inv_gamma");

    std::vector<std::vector<double>> mc;
    for (const auto& def : defs)
        mc.push_back(mc_curve(model, grid, p.r, def, p, req));

    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        const SnrPoint g = grid[k];
        std::vector<Cell> row{db[k], g.linear()};
        for (const auto& def : defs)
            row.emplace_back(model_outage(model, g, p.r, def));
        for (const auto& curve : mc)
            row.emplace_back(curve[k]);
        if (with_exact)
            for (const auto& def : defs)
                row.emplace_back(or_nan([&] {
                    const Rate rate = rate_from_mux(p.r, def, g, model_moments(g, model), model.rank());
                    return wishart2x2_outage(g, rate);
                }));
        row.emplace_back(1.0 / g.linear());
        t.add_row(std::move(row));
    }
    res.notes.push_back("Monte-Carlo trials per point: " + std::to_string(req.trials_explicit ? req.trials : p.trials));
    return res;
}

double exact_log_outage(SnrPoint g, double r)
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(2, 2));
    const Rate rate = rate_from_mux(r, MeanCapacity{}, g, model_moments(g, model), model.rank());
    return std::log(wishart2x2_outage(g, rate));
}

SweepResult fig3()
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(2, 2));
    const SnrPoint g = SnrPoint::from_db(10.0);
    SweepResult res;
    res.table.columns = {"r", "p_out_model", "d_prime_model", "c_model", "p_out_exact", "d_prime_exact", "c_exact"};
    for (int i = 1; i <= 40; ++i)
    {
        const double r = 0.05 * i;
        const DmtPoint pt = model_dmt_point(model, g, r, MeanCapacity{});
        const double lp = exact_log_outage(g, r);
        const double dp = d_prime_numeric_log([r](SnrPoint x) { return exact_log_outage(x, r); }, g);
        res.table.add_row({r, pt.p_out, pt.d_prime, pt.c_gamma, std::exp(lp), dp, std::exp(lp + dp * g.ln())});
    }
    return res;
}

SweepResult diversity_figure(const Preset& p)
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(p.m, p.n));
    const auto defs = all_definitions(model);
    const int n = p.n;
    SweepResult res;
    Table& t = res.table;
    t.columns = {"snr_db", "gamma"};
    for (auto& c : suffixed("d_prime_model", model))
        t.columns.push_back(c);
    for (const char* c : {"d_prime_approx_rawlog", "d_prime_approx_offsetlog", "d_prime_approx_meancap", "d_ref"})
        t.columns.emplace_back(c);

    for (double db : p.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        std::vector<Cell> row{db, g.linear()};
        for (const auto& def : defs)
            row.emplace_back(model_d_prime(model, g, p.r, def));
        row.emplace_back(or_nan([&] { return prop3_dmt(n, p.r, g, RawLog{}).d_prime; }));
        row.emplace_back(or_nan([&] { return prop3_dmt(n, p.r, g, defs[1]).d_prime; }));
        row.emplace_back(or_nan([&] { return th4_dmt(n, p.r, g).d_prime; }));
        row.emplace_back(zheng_tse_dmt(model.dims(), p.r));
        t.add_row(std::move(row));
    }
    return res;
}

SweepResult fig6(const Preset& p)
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(p.m, p.n));
    const double d = zheng_tse_dmt(model.dims(), p.r);
    SweepResult res;
    res.table.columns = {"snr_db", "gamma", "c_model", "c_exact", "c_approx1", "c_approx2", "flag"};
    for (double db : p.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        const DmtPoint pt = model_dmt_point(model, g, p.r, MeanCapacity{});
        const double lp = exact_log_outage(g, p.r);
        const double dp = d_prime_numeric_log([&](SnrPoint x) { return exact_log_outage(x, p.r); }, g);
        const double l = g.ln() - 1.0;
        const double approx1 = l > 0.0 ? std::exp(d) / std::sqrt(4.0 * std::numbers::pi * d * l) : nan;
        const Th4Result th4 = th4_dmt(p.n, p.r, g);
        res.table.add_row({db, g.linear(), pt.c_gamma, std::exp(lp + dp * g.ln()), approx1, th4.c_gamma,
                           std::string(th4.flags & dmt_flags::approximation_out_of_range ? "approx2_out_of_range" : "")});
    }
    return res;
}

SweepResult fig7(const Preset& p)
{
    const ChannelModel model = ChannelModel::iid(ChannelDims(p.m, p.n));
    const auto defs = all_definitions(model);
    SweepResult res;
    Table& t = res.table;
    t.columns = {"snr_db", "gamma"};
    for (auto& c : suffixed("d_prime_model", model))
        t.columns.push_back(c);
    for (const char* c : {"d_prime_approx", "d_ref", "d_combined"})
        t.columns.emplace_back(c);
    for (double db : p.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        std::vector<Cell> row{db, g.linear()};
        for (const auto& def : defs)
            row.emplace_back(model_d_prime(model, g, p.r, def));
        row.emplace_back(or_nan([&] { return prop4_dmt(model.dims(), p.r, g).d_prime; }));
        row.emplace_back(zheng_tse_dmt(model.dims(), p.r));
        row.emplace_back(or_nan([&] { return combined_dmt(model.dims(), p.r, g); }));
        t.add_row(std::move(row));
    }
    res.notes.push_back("crossover SNR (dB): " + format_double(combined_crossover(model.dims(), p.r).db()));
    return res;
}

} // namespace

SweepResult run_figure(const SweepRequest& req)
{
    const std::string& f = req.figure;
    if (f == "fig1")
        return outage_figure({10, 10, 9.0, {0.0, 60.0, 2.0}, 100000}, req, false);
    if (f == "fig2")
        return outage_figure({2, 2, 1.0, {0.0, 30.0, 1.0}, 1000000}, req, true);
    if (f == "fig3")
        return fig3();
    if (f == "fig4")
        return diversity_figure({10, 10, 9.0, {0.0, 80.0, 2.0}, 0});
    if (f == "fig5")
        return diversity_figure({2, 2, 1.0, {0.0, 40.0, 1.0}, 0});
    if (f == "fig6")
        return fig6({2, 2, 1.0, {0.0, 30.0, 1.0}, 0});
    if (f == "fig7")
        return fig7({9, 10, 8.7, {0.0, 80.0, 2.0}, 0});
    throw Error(ErrorKind::parameter, "unknown figure \"" + f + "\" (expected fig1..fig7)");
}

} // namespace fsdmt::app
