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

#include "fsdmt/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fsdmt/error.hpp"
#include "fsdmt/qfunc.hpp"

namespace fsdmt
{

namespace
{

constexpr double e = std::numbers::e;

std::uint32_t aspect_flags(ChannelDims dims)
{
    const double beta = dims.beta();
    return (beta < 0.05 || beta > 20.0) ? moment_flags::extreme_aspect : moment_flags::none;
}

double squared_frobenius(const CorrelationMatrix& r)
{
    return r.eigenvalues().squaredNorm();
}

double iid_highsnr_variance(double beta, double gamma)
{
    if (beta < 1.0)
        return -std::log1p(-beta);
    if (beta > 1.0)
        return -std::log1p(-1.0 / beta);
    return 0.5 * (std::log(gamma / 4.0) + 2.0 / std::sqrt(gamma));
}

} // namespace

double f_tulino(double x, double z)
{
    require(x >= 0.0 && z > 0.0, ErrorKind::parameter, "f_tulino needs x >= 0 and z > 0");
    const double sz = std::sqrt(z);
    const double d = std::sqrt(x * ((1.0 + sz) * (1.0 + sz)) + 1.0) - std::sqrt(x * ((1.0 - sz) * (1.0 - sz)) + 1.0);
    return d * d;
}

CapacityMoments iid_moments(SnrPoint gamma, ChannelDims dims)
{
    const double g = gamma.linear();
    const double beta = dims.beta();
    const double n = dims.n();
    const double f = f_tulino(g / beta, beta);
    const double f4g = f / (4.0 * g);

    CapacityMoments out{};
    out.gamma = gamma;
    out.flags = aspect_flags(dims);
    out.mean_nats = n * (beta * std::log1p(g / beta - f / 4.0) + std::log1p(g - f / 4.0) - beta * f4g);
    out.var_nats2 = -std::log1p(-beta * f4g * f4g);
    return out;
}

PowerOffset iid_power_offset(ChannelDims dims)
{
    const double beta = dims.beta();
    if (beta < 1.0)
        return PowerOffset(e * beta * std::pow(1.0 - beta, 1.0 / beta - 1.0));
    if (beta > 1.0)
        return PowerOffset(e * std::pow(1.0 - 1.0 / beta, beta - 1.0));
    return PowerOffset(e);
}

OffsetMoments iid_moments_highsnr(SnrPoint gamma, ChannelDims dims)
{
    const PowerOffset a = iid_power_offset(dims);
    OffsetMoments out{};
    out.offset = a;
    out.moments.gamma = gamma;
    out.moments.flags = aspect_flags(dims);
    out.moments.mean_nats = dims.min_dim() * std::log(gamma.linear() / a.value());
    out.moments.var_nats2 = iid_highsnr_variance(dims.beta(), gamma.linear());
    return out;
}

CapacityMoments square_expansion_moments(SnrPoint gamma, int n)
{
    require(n >= 1, ErrorKind::parameter, "n must be positive");
    const double g = gamma.linear();
    CapacityMoments out{};
    out.gamma = gamma;
    out.mean_nats = n * (std::log(g / e) + 2.0 / std::sqrt(g));
    out.var_nats2 = 0.5 * std::log(g / 4.0) + 1.0 / std::sqrt(g);
    return out;
}

OffsetMoments kronecker_moments(SnrPoint gamma, ChannelDims dims, const CorrelationMatrix& rt,
                                const CorrelationMatrix& rr)
{
    require(rt.size() == dims.m() && rr.size() == dims.n(), ErrorKind::parameter,
            "correlation sizes must match the channel dimensions");
    const double g = gamma.linear();
    const double m = dims.m();

    double mean = 0.0;
    double sum_sq = 0.0;
    double log_det = 0.0;
    bool singular = false;
    const double floor = psd_tolerance * rr.eigenvalues().maxCoeff();
    for (double lam : rr.eigenvalues())
    {
        mean += std::log1p(g * lam);
        const double t = g * lam / (1.0 + g * lam);
        sum_sq += t * t;
        if (lam <= floor)
            singular = true;
        else
            log_det += std::log(lam);
    }

    OffsetMoments out{};
    out.moments.gamma = gamma;
    out.moments.mean_nats = mean;
    out.moments.var_nats2 = squared_frobenius(rt) / (m * m) * sum_sq;
    if (dims.m() < 4 * dims.n())
        out.moments.flags |= moment_flags::short_transmit_array;

    const double a = std::exp(-log_det / dims.n());
    if (!singular && std::isfinite(a))
    {
        out.offset = PowerOffset(a);
    }
    else
    {
        out.offset = PowerOffset(std::numeric_limits<double>::infinity());
        out.moments.flags |= moment_flags::singular_receive;
    }
    return out;
}

OffsetMoments keyhole_moments(SnrPoint gamma, ChannelDims dims, const std::vector<KeyholeMode>& modes)
{
    require(!modes.empty(), ErrorKind::parameter, "keyhole moments need at least one mode");
    const double g = gamma.linear();
    const double m = dims.m();
    const double n = dims.n();

    double mean = 0.0;
    double var = 0.0;
    double log_gain = 0.0;
    for (const auto& mode : modes)
    {
        const double x = mode.gain() * g;
        mean += std::log1p(x);
        const double t = x / (1.0 + x);
        var += t * t * (mode.beta_t * squared_frobenius(mode.rt) / (m * m) + mode.beta_r * squared_frobenius(mode.rr) / (n * n));
        log_gain += std::log(mode.gain());
    }

    OffsetMoments out{};
    out.moments.gamma = gamma;
    out.moments.mean_nats = mean;
    out.moments.var_nats2 = var;
    out.offset = PowerOffset(std::exp(-log_gain / static_cast<double>(modes.size())));
    return out;
}

CapacityMoments model_moments(SnrPoint gamma, const ChannelModel& model)
{
    switch (model.kind())
    {
    case ModelKind::iid:
        return iid_moments(gamma, model.dims());
    case ModelKind::kronecker:
    {
        const auto& k = model.as<KroneckerRayleigh>();
        return kronecker_moments(gamma, k.dims, k.rt, k.rr).moments;
    }
    case ModelKind::keyhole:
    {
        const auto& k = model.as<MultiKeyhole>();
        return keyhole_moments(gamma, k.dims, k.modes).moments;
    }
    }
    throw Error(ErrorKind::parameter, "unknown channel model");
}

PowerOffset model_power_offset(const ChannelModel& model)
{
    const SnrPoint unit(1.0);
    switch (model.kind())
    {
    case ModelKind::iid:
        return iid_power_offset(model.dims());
    case ModelKind::kronecker:
    {
        const auto& k = model.as<KroneckerRayleigh>();
        return kronecker_moments(unit, k.dims, k.rt, k.rr).offset;
    }
    case ModelKind::keyhole:
    {
        const auto& k = model.as<MultiKeyhole>();
        return keyhole_moments(unit, k.dims, k.modes).offset;
    }
    }
    throw Error(ErrorKind::parameter, "unknown channel model");
}

double gaussian_outage(const CapacityMoments& moments, Rate rate)
{
    const double sigma = moments.stddev();
    const double r = rate.nats();
    if (!(sigma > 0.0) || std::isinf(r))
    {
        if (r < moments.mean_nats)
            return 0.0;
        return r > moments.mean_nats ? 1.0 : 0.5;
    }
    return q_function((moments.mean_nats - r) / sigma);
}

double log_gaussian_outage(const CapacityMoments& moments, Rate rate)
{
    const double sigma = moments.stddev();
    const double r = rate.nats();
    if (!(sigma > 0.0) || std::isinf(r))
        return std::log(gaussian_outage(moments, rate));
    return log_q((moments.mean_nats - r) / sigma);
}

} // namespace fsdmt
