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

#include "fsdmt_app/request.hpp"

#include <cmath>
#include <sstream>

namespace fsdmt::app
{

SnrRange SnrRange::parse(const std::string& text)
{
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
    {
        try
        {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            require(used == item.size(), ErrorKind::parameter, "malformed --snr-db value");
        }
        catch (const std::logic_error&)
        {
            throw Error(ErrorKind::parameter, "malformed --snr-db value: " + text);
        }
    }
    SnrRange out;
    if (parts.size() == 1)
        out = {parts[0], parts[0], 1.0};
    else if (parts.size() == 3)
        out = {parts[0], parts[1], parts[2]};
    else
        throw Error(ErrorKind::parameter, "--snr-db expects start:stop:step");
    out.validate();
    return out;
}

void SnrRange::validate() const
{
    require(std::isfinite(start_db) && std::isfinite(stop_db) && std::isfinite(step_db), ErrorKind::parameter,
            "SNR range must be finite");
    require(step_db > 0.0, ErrorKind::parameter, "SNR step must be positive");
    require(stop_db >= start_db, ErrorKind::parameter, "SNR stop must not be below start");
}

std::vector<double> SnrRange::db_values() const
{
    validate();
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((stop_db - start_db) / step_db + 1e-9));
    for (long i = 0; i <= count; ++i)
        out.push_back(start_db + static_cast<double>(i) * step_db);
    return out;
}

void SweepRequest::validate() const
{
    snr.validate();
    require(m >= 1 && n >= 1, ErrorKind::parameter, "--m and --n must be positive");
    require(model == "iid" || model == "kronecker" || model == "keyhole", ErrorKind::parameter,
            "--model must be iid, kronecker or keyhole");
    require(mux == "rawlog" || mux == "offsetlog" || mux == "meancap", ErrorKind::parameter,
            "--mux must be rawlog, offsetlog or meancap");
    require(r >= 0.0, ErrorKind::parameter, "--r must be nonnegative");
    require(!rate || *rate >= 0.0, ErrorKind::parameter, "--rate-nats must be nonnegative");
    require(workers >= 1, ErrorKind::parameter, "--workers must be positive");
    const bool needs_trials = command == Command::mc || command == Command::validate;
    require(!needs_trials || trials >= 1, ErrorKind::configuration, "this command needs at least one trial");
}

Scenario build_model(const SweepRequest& req)
{
    if (req.scenario)
        return load_scenario(*req.scenario);

    const ChannelDims dims(req.m, req.n);
    if (req.model == "iid")
    {
        require(req.entry_dist == "gaussian" || req.entry_dist == "two_point", ErrorKind::parameter,
                "entry distribution must be gaussian or two_point");
        const auto dist = req.entry_dist == "two_point" ? EntryDistribution::two_point : EntryDistribution::gaussian;
        return {ChannelModel::iid(dims, dist), {}};
    }
    if (req.model == "kronecker")
        return {ChannelModel::kronecker(dims, make_exponential_correlation(req.m, req.rho_t),
                                        make_exponential_correlation(req.n, req.rho_r)),
                {}};
    require(req.model == "keyhole", ErrorKind::parameter, "--model must be iid, kronecker or keyhole");
    return {ChannelModel::single_keyhole(dims), {}};
}

MuxGainDef build_mux(const std::string& name, const ChannelModel& model)
{
    if (name == "rawlog")
        return RawLog{};
    if (name == "offsetlog")
        return offset_log_for(model);
    require(name == "meancap", ErrorKind::parameter, "--mux must be rawlog, offsetlog or meancap");
    return MeanCapacity{};
}

int exit_code_for(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::regime:
    case ErrorKind::degenerate:
        return 3;
    case ErrorKind::precision:
        return 4;
    default:
        return 2;
    }
}

std::string_view to_string(Command c) noexcept
{
    switch (c)
    {
    case Command::moments:
        return "moments";
    case Command::outage:
        return "outage";
    case Command::dmt:
        return "dmt";
    case Command::offset:
        return "offset";
    case Command::mc:
        return "mc";
    case Command::oracle:
        return "oracle";
    case Command::validate:
        return "validate";
    case Command::figure:
        return "figure";
    }
    return "unknown";
}

} // namespace fsdmt::app
