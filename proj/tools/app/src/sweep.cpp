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

#include "fsdmt_app/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>
#include <fsdmt/oracle.hpp>

#include "detail.hpp"

namespace fsdmt::app
{

namespace detail
{

std::string join_flags(const std::vector<std::string>& flags)
{
    std::string out;
    for (const auto& f : flags)
    {
        if (f.empty())
            continue;
        if (!out.empty())
            out += '|';
        out += f;
    }
    return out;
}

std::optional<Rate> rate_at(const SweepRequest& req, const ChannelModel& model, const MuxGainDef& mux, SnrPoint gamma)
{
    if (req.rate)
        return Rate(*req.rate / units_scale(req.units));
    try
    {
        return rate_from_mux(req.r, mux, gamma, model_moments(gamma, model), model.rank());
    }
    catch (const Error& e)
    {
        if (e.kind() != ErrorKind::regime)
            throw;
        return std::nullopt;
    }
}

std::vector<SnrPoint> grid(const std::vector<double>& db)
{
    std::vector<SnrPoint> out;
    out.reserve(db.size());
    for (double v : db)
        out.push_back(SnrPoint::from_db(v));
    return out;
}

double units_scale(Units u) noexcept
{
    return u == Units::bits ? 1.0 / std::log(2.0) : 1.0;
}

} // namespace detail

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

using detail::join_flags;

bool is_identity(const CorrelationMatrix& r)
{
    return (r.entries() - CMatrix::Identity(r.size(), r.size())).cwiseAbs().maxCoeff() <= 1e-12;
}

std::vector<std::string> moment_flag_names(std::uint32_t flags)
{
    std::vector<std::string> out;
    if (flags & moment_flags::extreme_aspect)
        out.emplace_back("extreme_aspect");
    if (flags & moment_flags::short_transmit_array)
        out.emplace_back("short_transmit_array");
    if (flags & moment_flags::singular_receive)
        out.emplace_back("singular_receive");
    return out;
}

std::vector<std::string> dmt_flag_names(std::uint32_t flags)
{
    std::vector<std::string> out;
    if (flags & dmt_flags::approximation_out_of_range)
        out.emplace_back("approximation_out_of_range");
    if (flags & dmt_flags::offset_vanishes)
        out.emplace_back("offset_vanishes");
    if (flags & dmt_flags::infinite_diversity)
        out.emplace_back("infinite_diversity");
    if (flags & dmt_flags::moments_flagged)
        out.emplace_back("moments_flagged");
    return out;
}

SweepResult moments_sweep(const SweepRequest& req, const ChannelModel& model)
{
    SweepResult res;
    res.table.columns = columns_for(Command::moments);
    const double u = detail::units_scale(req.units);
    const PowerOffset a = model_power_offset(model);
    for (double db : req.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        const CapacityMoments cm = model_moments(g, model);
        res.table.add_row({db, g.linear(), cm.mean_nats * u, cm.var_nats2 * u * u, cm.stddev() * u, a.value(),
                           join_flags(moment_flag_names(cm.flags))});
    }
    return res;
}

SweepResult outage_sweep(const SweepRequest& req, const ChannelModel& model)
{
    SweepResult res;
    res.table.columns = columns_for(Command::outage);
    const MuxGainDef mux = build_mux(req.mux, model);
    const double r = req.rate ? nan : req.r;
    for (double db : req.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        const auto rate = detail::rate_at(req, model, mux, g);
        if (!rate)
        {
            res.table.add_row({db, g.linear(), r, nan, nan, std::string("regime_skipped")});
            continue;
        }
        const CapacityMoments cm = model_moments(g, model);
        res.table.add_row({db, g.linear(), r, rate->nats(), gaussian_outage(cm, *rate), join_flags(moment_flag_names(cm.flags))});
    }
    return res;
}

SweepResult dmt_sweep(const SweepRequest& req, const ChannelModel& model)
{
    SweepResult res;
    res.table.columns = columns_for(Command::dmt);
    const MuxGainDef mux = build_mux(req.mux, model);
    for (double db : req.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        try
        {
            const DmtPoint p = model_dmt_point(model, g, req.r, mux);
            res.table.add_row({db, g.linear(), req.r, p.rate.nats(), p.p_out, p.d_gamma, p.d_prime, p.c_gamma,
                               join_flags(dmt_flag_names(p.flags))});
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::regime)
                throw;
            res.table.add_row({db, g.linear(), req.r, nan, nan, nan, nan, nan, std::string("regime_skipped")});
        }
    }
    return res;
}

bool square_iid(const ChannelModel& model)
{
    return model.kind() == ModelKind::iid && model.dims().square();
}

SweepResult offset_sweep(const SweepRequest& req, const ChannelModel& model)
{
    SweepResult res;
    res.table.columns = columns_for(Command::offset);
    const MuxGainDef mux = build_mux(req.mux, model);
    const PowerOffset a = model_power_offset(model);
    for (double db : req.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        std::vector<std::string> flags;
        double closed = nan;
        if (square_iid(model))
        {
            try
            {
                if (std::holds_alternative<MeanCapacity>(mux))
                {
                    const Th4Result t = th4_dmt(model.dims().n(), req.r, g);
                    closed = t.c_gamma;
                    for (auto& f : dmt_flag_names(t.flags))
                        flags.push_back("closed_form_" + f);
                }
                else
                {
                    closed = prop3_dmt(model.dims().n(), req.r, g, mux).c_gamma_limit;
                }
            }
            catch (const Error& e)
            {
                if (e.kind() != ErrorKind::regime)
                    throw;
                flags.emplace_back("closed_form_regime");
            }
        }
        try
        {
            const DmtPoint p = model_dmt_point(model, g, req.r, mux);
            for (auto& f : dmt_flag_names(p.flags))
                flags.push_back(f);
            res.table.add_row({db, g.linear(), req.r, a.value(), p.d_prime, p.c_gamma, closed, join_flags(flags)});
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::regime)
                throw;
            flags.insert(flags.begin(), "regime_skipped");
            res.table.add_row({db, g.linear(), req.r, a.value(), nan, nan, closed, join_flags(flags)});
        }
    }
    return res;
}

SweepResult mc_sweep(const SweepRequest& req, const ChannelModel& model)
{
    SweepResult res;
    res.table.columns = columns_for(Command::mc);
    require(req.trials >= 1, ErrorKind::configuration, "Monte-Carlo needs at least one trial");

    SimConfig cfg{model, detail::grid(req.snr.db_values())};
    if (req.rate)
        cfg.target = Rate(*req.rate / detail::units_scale(req.units));
    else
        cfg.target = MuxTarget{build_mux(req.mux, model), req.r};
    cfg.trials = req.trials;
    cfg.seed = req.seed;
    cfg.workers = req.workers;

    const auto outage = estimate_outage(cfg);
    std::vector<EmpiricalMoments> moments;
    if (req.trials >= 2)
        moments = estimate_moments(cfg);

    std::vector<DiversityEstimate> slopes;
    try
    {
        slopes = estimate_diversity(outage);
    }
    catch (const Error& e)
    {
        if (e.kind() != ErrorKind::insufficient_data)
            throw;
        res.notes.emplace_back("mc: too few reliable points for a diversity estimate");
    }

    for (std::size_t k = 0; k < outage.size(); ++k)
    {
        const auto& o = outage[k];
        double d_hat = nan;
        double hw = nan;
        for (const auto& s : slopes)
            if (s.gamma == o.gamma)
            {
                d_hat = s.d_prime_hat;
                hw = s.half_width;
            }
        std::vector<std::string> flags;
        if (o.skipped)
            flags.emplace_back("regime_skipped");
        else if (!o.reliable())
            flags.emplace_back("unreliable");
        const double mean = moments.empty() ? nan : moments[k].moments.mean_nats;
        const double var = moments.empty() ? nan : moments[k].moments.var_nats2;
        res.table.add_row({o.gamma.db(), o.gamma.linear(), o.skipped ? nan : o.rate.nats(), o.p_hat, o.std_error,
                           static_cast<std::int64_t>(o.count), static_cast<std::int64_t>(o.trials), mean, var, d_hat, hw,
                           join_flags(flags)});
    }
    return res;
}

SweepResult oracle_sweep(const SweepRequest& req, const ChannelModel& model)
{
    const auto oracle = find_oracle(model);
    require(oracle.has_value(), ErrorKind::configuration, "no exact oracle for this channel model");
    SweepResult res;
    res.table.columns = columns_for(Command::oracle);
    const MuxGainDef mux = build_mux(req.mux, model);
    for (double db : req.snr.db_values())
    {
        const SnrPoint g = SnrPoint::from_db(db);
        const auto rate = detail::rate_at(req, model, mux, g);
        if (!rate)
        {
            res.table.add_row({db, g.linear(), nan, nan, oracle->name, std::string("regime_skipped")});
            continue;
        }
        res.table.add_row({db, g.linear(), rate->nats(), oracle->outage(g, *rate), oracle->name, std::string()});
    }
    return res;
}

} // namespace

std::optional<ExactOracle> find_oracle(const ChannelModel& model)
{
    const ChannelDims dims = model.dims();
    bool rayleigh = false;
    if (model.kind() == ModelKind::iid)
        rayleigh = model.as<IidUnitVariance>().dist == EntryDistribution::gaussian;
    else if (model.kind() == ModelKind::kronecker)
        rayleigh = is_identity(model.as<KroneckerRayleigh>().rt) && is_identity(model.as<KroneckerRayleigh>().rr);

    if (rayleigh)
    {
        if (dims.m() == 1 && dims.n() == 1)
            return ExactOracle{"siso_rayleigh", [](SnrPoint g, Rate r) { return siso_rayleigh_outage(g, r); }};
        if (dims.min_dim() == 1)
            return ExactOracle{"vector_rayleigh", [dims](SnrPoint g, Rate r) { return vector_rayleigh_outage(g, r, dims); }};
        if (dims.m() == 2 && dims.n() == 2)
            return ExactOracle{"wishart2x2", [](SnrPoint g, Rate r) { return wishart2x2_outage(g, r); }};
        return std::nullopt;
    }

    if (model.kind() == ModelKind::keyhole)
    {
        const auto& k = model.as<MultiKeyhole>();
        if (k.modes.size() != 1)
            return std::nullopt;
        const KeyholeMode& mode = k.modes.front();
        if (!is_identity(mode.rt) || !is_identity(mode.rr) || mode.beta_t != 1.0 || mode.beta_r != 1.0)
            return std::nullopt;
        const double gain = mode.gain();
        return ExactOracle{"single_keyhole",
                           [dims, gain](SnrPoint g, Rate r) { return single_keyhole_outage(g, r, dims, gain); }};
    }
    return std::nullopt;
}

namespace
{

bool all_regime_skipped(const Table& table)
{
    if (table.rows.empty())
        return false;
    const std::size_t col = table.column("flag");
    return std::all_of(table.rows.begin(), table.rows.end(), [col](const std::vector<Cell>& row) {
        const auto* flag = std::get_if<std::string>(&row[col]);
        return flag && flag->find("regime_skipped") != std::string::npos;
    });
}

} // namespace

std::vector<std::string> columns_for(Command command)
{
    switch (command)
    {
    case Command::moments:
        return {"snr_db", "gamma", "mean", "variance", "stddev", "offset_a", "flag"};
    case Command::outage:
        return {"snr_db", "gamma", "r", "rate_nats", "p_out_model", "flag"};
    case Command::dmt:
        return {"snr_db", "gamma", "r", "rate_nats", "p_out_model", "d_gamma", "d_prime", "c_gamma", "flag"};
    case Command::offset:
        return {"snr_db", "gamma", "r", "offset_a", "d_prime", "c_gamma", "c_closed_form", "flag"};
    case Command::mc:
        return {"snr_db", "gamma", "rate_nats", "p_hat", "std_error", "count", "trials", "mean_hat", "var_hat",
                "d_prime_hat", "half_width", "flag"};
    case Command::oracle:
        return {"snr_db", "gamma", "rate_nats", "p_out_oracle", "oracle", "flag"};
    case Command::validate:
        return {"snr_db", "gamma", "rate_nats", "p_out_model", "p_hat", "std_error", "p_out_oracle",
                "model_oracle_ratio", "mc_z", "result", "flag"};
    case Command::figure:
        return {};
    }
    return {};
}

SweepResult run_sweep(const SweepRequest& req)
{
    try
    {
        req.validate();
        if (req.command == Command::figure)
            return run_figure(req);
        if (req.command == Command::validate)
            return validate(req);

        Scenario sc = build_model(req);
        SweepResult res;
        switch (req.command)
        {
        case Command::moments:
            res = moments_sweep(req, sc.model);
            break;
        case Command::outage:
            res = outage_sweep(req, sc.model);
            break;
        case Command::dmt:
            res = dmt_sweep(req, sc.model);
            break;
        case Command::offset:
            res = offset_sweep(req, sc.model);
            break;
        case Command::mc:
            res = mc_sweep(req, sc.model);
            break;
        case Command::oracle:
            res = oracle_sweep(req, sc.model);
            break;
        default:
            break;
        }
        res.notes.insert(res.notes.begin(), sc.notes.begin(), sc.notes.end());
        if (all_regime_skipped(res.table))
        {
            res.exit_code = exit_code_for(ErrorKind::regime);
            res.notes.push_back("regime error: no grid point lies in the valid SNR regime");
        }
        return res;
    }
    catch (const Error& e)
    {
        SweepResult res;
        res.exit_code = exit_code_for(e.kind());
        res.notes.push_back(std::string(to_string(e.kind())) + " error: " + e.what());
        return res;
    }
}

} // namespace fsdmt::app
