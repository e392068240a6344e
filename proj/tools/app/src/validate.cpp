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

#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>

#include "detail.hpp"
#include "fsdmt_app/sweep.hpp"

namespace fsdmt::app
{

SweepResult validate(const SweepRequest& req)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const ValidateGates gates;
    require(req.trials >= 1, ErrorKind::configuration, "validate needs at least one Monte-Carlo trial");

    Scenario sc = build_model(req);
    const ChannelModel& model = sc.model;
    const auto oracle = find_oracle(model);

    SimConfig cfg{model, detail::grid(req.snr.db_values())};
    if (req.rate)
        cfg.target = Rate(*req.rate / detail::units_scale(req.units));
    else
        cfg.target = MuxTarget{build_mux(req.mux, model), req.r};
    cfg.trials = req.trials;
    cfg.seed = req.seed;
    cfg.workers = req.workers;
    const auto mc = estimate_outage(cfg);

    SweepResult res;
    res.notes = sc.notes;
    res.table.columns = columns_for(Command::validate);
    std::size_t passed = 0;
    std::size_t failed = 0;

    for (const auto& o : mc)
    {
        const SnrPoint g = o.gamma;
        if (o.skipped)
        {
            res.table.add_row({g.db(), g.linear(), nan, nan, nan, nan, nan, nan, nan, std::string("n/a"),
                               std::string("regime_skipped")});
            continue;
        }
        const double p_model = gaussian_outage(model_moments(g, model), o.rate);
        const double p_exact = oracle ? oracle->outage(g, o.rate) : nan;
        const double n = static_cast<double>(o.trials);

        bool any = false;
        bool ok = true;
        double ratio = nan;
        double z = nan;
        if (oracle)
        {
            ratio = p_model / p_exact;
            if (p_exact >= gates.model_window_lo && p_exact <= gates.model_window_hi)
            {
                any = true;
                ok = ok && ratio <= gates.model_factor && ratio >= 1.0 / gates.model_factor;
            }
            const double sigma = std::sqrt(p_exact * (1.0 - p_exact) / n);
            z = sigma > 0.0 ? (o.p_hat - p_exact) / sigma : nan;
            if (o.p_hat >= gates.mc_floor)
            {
                any = true;
                ok = ok && std::abs(z) <= gates.mc_sigmas;
            }
        }
        else if (o.reliable() && o.p_hat >= gates.mc_floor)
        {
            ratio = p_model / o.p_hat;
            any = true;
            ok = ratio <= gates.model_factor && ratio >= 1.0 / gates.model_factor;
        }

        std::string verdict = "n/a";
        if (any)
        {
            verdict = ok ? "pass" : "fail";
            ++(ok ? passed : failed);
        }
        res.table.add_row({g.db(), g.linear(), o.rate.nats(), p_model, o.p_hat, o.std_error, p_exact, ratio, z, verdict,
                           std::string(o.reliable() ? "" : "unreliable")});
    }
    res.notes.push_back("validate: " + std::to_string(passed) + " pass, " + std::to_string(failed) + " fail" +
                        (oracle ? ", oracle " + oracle->name : ", no exact oracle; model compared with Monte-Carlo"));
    return res;
}

} // namespace fsdmt::app
