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

#include "fsdmt/dmt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fsdmt/error.hpp"
#include "fsdmt/moments.hpp"

namespace fsdmt
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double pi = std::numbers::pi;

void require_gain(double r, double r_max)
{
    require(r >= 0.0 && r <= r_max, ErrorKind::parameter, "multiplexing gain out of range");
}

double frobenius_sq(const CorrelationMatrix& r)
{
    return r.eigenvalues().squaredNorm();
}

} // namespace

std::string_view mux_name(const MuxGainDef& def) noexcept
{
    switch (def.index())
    {
    case 0:
        return "rawlog";
    case 1:
        return "offsetlog";
    default:
        return "meancap";
    }
}

MuxGainDef offset_log_for(const ChannelModel& model)
{
    return OffsetLog{model_power_offset(model)};
}

Rate rate_from_mux(double r, const MuxGainDef& def, SnrPoint gamma, const CapacityMoments& moments, ChannelRank rank)
{
    require_gain(r, rank.value());
    if (r == 0.0)
        return Rate(0.0);

    if (std::holds_alternative<RawLog>(def))
    {
        require(gamma.linear() > 1.0, ErrorKind::regime, "RawLog rate needs gamma > 1");
        return Rate(r * gamma.ln());
    }
    if (const auto* o = std::get_if<OffsetLog>(&def))
    {
        require(gamma.linear() > o->a.value(), ErrorKind::regime, "OffsetLog rate needs gamma > a");
        return Rate(r * std::log(gamma.linear() / o->a.value()));
    }
    return Rate(r * moments.mean_nats / rank.value());
}

double d_gamma_from_outage(double p_out, SnrPoint gamma)
{
    require(p_out >= 0.0 && p_out <= 1.0, ErrorKind::parameter, "outage probability must lie in [0, 1]");
    require(gamma.linear() > 1.0, ErrorKind::regime, "d_gamma needs gamma > 1");
    if (p_out == 0.0)
        return inf;
    return -std::log(p_out) / gamma.ln();
}

double d_prime_numeric_log(const std::function<double(SnrPoint)>& log_p_fn, SnrPoint gamma, double step)
{
    require(step > 0.0, ErrorKind::parameter, "stencil step must be positive");
    const double hi = log_p_fn(gamma.scaled_log(step));
    const double lo = log_p_fn(gamma.scaled_log(-step));
    require(std::isfinite(hi) && std::isfinite(lo), ErrorKind::precision,
            "outage underflows inside the stencil; use a log-domain outage");
    return -(hi - lo) / (2.0 * step);
}

double d_prime_numeric(const std::function<double(SnrPoint)>& p_out_fn, SnrPoint gamma, double step)
{
    return d_prime_numeric_log([&](SnrPoint g) { return std::log(p_out_fn(g)); }, gamma, step);
}

double snr_offset_c(double p_out, double d_prime, SnrPoint gamma)
{
    require(p_out > 0.0, ErrorKind::parameter, "offset needs a positive outage probability");
    return std::exp(std::log(p_out) + d_prime * gamma.ln());
}

double outage_from_dmt(double c, double d_prime, SnrPoint gamma)
{
    require(c > 0.0, ErrorKind::parameter, "offset must be positive");
    return std::min(1.0, std::exp(std::log(c) - d_prime * gamma.ln()));
}

double zheng_tse_dmt(ChannelDims dims, double r)
{
    require_gain(r, dims.min_dim());
    const double k = std::floor(r);
    const auto at = [&](double x) { return (dims.n() - x) * (dims.m() - x); };
    if (k == r)
        return at(k);
    return at(k) + (r - k) * (at(k + 1.0) - at(k));
}

double keyhole_dmt_asymptotic(ChannelDims dims, double r)
{
    require_gain(r, 1.0);
    return dims.min_dim() * (1.0 - r);
}

DiversityPair prop2_dmt(const MomentProvider& moments, SnrPoint gamma, double r, ChannelRank rank, double step)
{
    require_gain(r, rank.value());
    require(gamma.linear() > 1.0, ErrorKind::regime, "Gaussian-model DMT needs gamma > 1");
    const double ms = rank.value();

    const auto snr_ratio = [&](SnrPoint g) {
        const CapacityMoments cm = moments(g);
        require(cm.var_nats2 > 0.0, ErrorKind::degenerate, "capacity variance is zero");
        const double c1 = cm.mean_nats / ms;
        return c1 * c1 / cm.var_nats2;
    };

    const double gap = (ms - r) * (ms - r);
    const double slope = (snr_ratio(gamma.scaled_log(step)) - snr_ratio(gamma.scaled_log(-step))) / (2.0 * step);
    return {snr_ratio(gamma) * gap / (2.0 * gamma.ln()), 0.5 * slope * gap};
}

DiversityPair prop2_dmt(const ChannelModel& model, SnrPoint gamma, double r, double step)
{
    return prop2_dmt([&](SnrPoint g) { return model_moments(g, model); }, gamma, r, model.rank(), step);
}

Th4Result th4_dmt(int n, double r, SnrPoint gamma)
{
    require(n >= 1, ErrorKind::parameter, "n must be positive");
    require_gain(r, n);
    require(gamma.linear() >= 1.0, ErrorKind::regime, "Theorem-4 forms need gamma >= 1");

    if (r == n)
        return {0.0, 0.0, 0.5, dmt_flags::none};

    const double g = gamma.linear();
    const double sg = std::sqrt(g);
    const double l = std::log(g) - 1.0;
    const double d = (n - r) * (n - r);

    Th4Result out{};
    out.d_prime = d * (1.0 - 1.0 / (2.0 * sg));
    out.d_gamma = d * (1.0 + 2.0 / (sg * l));
    const double gate = out.d_gamma * l;
    out.c_gamma = gate > 0.0 ? std::exp(out.d_gamma) / std::sqrt(4.0 * pi * gate) : std::numeric_limits<double>::quiet_NaN();
    if (!(gate > 1.0))
        out.flags |= dmt_flags::approximation_out_of_range;
    if (r == 0.0)
        out.flags |= dmt_flags::offset_vanishes;
    return out;
}

Prop3Result prop3_dmt(int n, double r, SnrPoint gamma, const MuxGainDef& def)
{
    require(n >= 1, ErrorKind::parameter, "n must be positive");
    require_gain(r, n);
    require(!std::holds_alternative<MeanCapacity>(def), ErrorKind::parameter,
            "Proposition-3 forms cover the RawLog and OffsetLog definitions");
    require(gamma.linear() > std::numbers::e, ErrorKind::regime, "Proposition-3 forms need gamma > e");

    if (r == n)
        return {0.0, 0.5};

    const bool raw = std::holds_alternative<RawLog>(def);
    const double l = gamma.ln() - 1.0;
    const double d = (n - r) * (n - r);
    double factor = 1.0 - ((n + r) / (n - r)) / std::sqrt(gamma.linear());
    if (raw)
    {
        const double q = r / (n - r);
        factor -= q * q / (l * l);
    }
    double log_c = d - 0.5 * std::log(4.0 * pi * d * l);
    if (raw)
        log_c += 2.0 * r * (n - r);
    return {d * factor, std::exp(log_c)};
}

SnrPoint convergence_threshold(const MuxGainDef& def, int n, double r, const ThresholdConfig& cfg)
{
    require(n >= 1, ErrorKind::parameter, "n must be positive");
    require_gain(r, n);
    require(cfg.accuracy > 0.0 && cfg.accuracy < 1.0, ErrorKind::parameter, "accuracy must lie in (0, 1)");
    if (r == n)
        return SnrPoint(inf);

    if (std::holds_alternative<MeanCapacity>(def))
    {
        const double s = 0.5 / cfg.accuracy;
        return SnrPoint(s * s);
    }
    const double s = (n + r) / ((n - r) * cfg.accuracy);
    double g = s * s;
    if (std::holds_alternative<RawLog>(def))
        g = std::max(g, std::exp(1.0 + cfg.log_term_coefficient * r / (n - r)));
    return SnrPoint(g);
}

DiversityPair prop4_dmt(ChannelDims dims, double r, SnrPoint gamma)
{
    require(!dims.square(), ErrorKind::regime, "Proposition 4 covers non-square channels; use th4_dmt");
    require_gain(r, dims.min_dim());
    const double a = iid_power_offset(dims).value();
    require(gamma.linear() > a, ErrorKind::regime, "Proposition 4 needs gamma > a");
    const double gap = dims.min_dim() - r;
    const double d_prime = gap * gap * std::log(gamma.linear() / a) / -std::log1p(-dims.beta_star());
    return {d_prime / 2.0, d_prime};
}

double combined_dmt(ChannelDims dims, double r, SnrPoint gamma)
{
    return std::min(prop4_dmt(dims, r, gamma).d_prime, zheng_tse_dmt(dims, r));
}

SnrPoint combined_crossover(ChannelDims dims, double r)
{
    require(!dims.square(), ErrorKind::regime, "Proposition 4 covers non-square channels");
    require_gain(r, dims.min_dim());
    const double gap = dims.min_dim() - r;
    if (gap == 0.0)
        return SnrPoint(inf);
    const double a = iid_power_offset(dims).value();
    return SnrPoint(a * std::exp(zheng_tse_dmt(dims, r) * -std::log1p(-dims.beta_star()) / (gap * gap)));
}

double th5_dmt(ChannelDims dims, double r, SnrPoint gamma, const CorrelationMatrix& rt, const CorrelationMatrix& rr)
{
    require(rt.size() == dims.m() && rr.size() == dims.n(), ErrorKind::parameter,
            "correlation sizes must match the channel dimensions");
    require_gain(r, dims.min_dim());
    const OffsetMoments km = kronecker_moments(gamma, dims, rt, rr);
    require(km.offset.finite(), ErrorKind::rank, "Theorem 5 needs a full-rank receive correlation");
    const double a = km.offset.value();
    require(gamma.linear() > a, ErrorKind::regime, "Theorem 5 needs gamma > a");

    const double n = dims.n();
    const double m = dims.m();
    const double measure_sq = frobenius_sq(rt) / (m * m);
    return (n - r) * (n - r) * std::log(gamma.linear() / a) / (n * measure_sq);
}

double th6_dmt(ChannelDims dims, double r, SnrPoint gamma, const std::vector<KeyholeMode>& modes)
{
    require(!modes.empty(), ErrorKind::parameter, "Theorem 6 needs at least one mode");
    const int count = static_cast<int>(modes.size());
    require(count <= dims.min_dim(), ErrorKind::parameter, "mode count must not exceed min(m, n)");
    require_gain(r, count);
    const OffsetMoments km = keyhole_moments(gamma, dims, modes);
    const double a = km.offset.value();
    require(gamma.linear() > a, ErrorKind::regime, "Theorem 6 needs gamma > a");

    const double m = dims.m();
    const double n = dims.n();
    double denom = 0.0;
    for (const auto& mode : modes)
        denom += mode.beta_t * frobenius_sq(mode.rt) / (m * m) + mode.beta_r * frobenius_sq(mode.rr) / (n * n);
    require(denom > 0.0, ErrorKind::degenerate, "modal vectors have deterministic norms");
    return (count - r) * (count - r) * std::log(gamma.linear() / a) / denom;
}

double model_log_outage(const ChannelModel& model, SnrPoint gamma, double r, const MuxGainDef& def)
{
    const CapacityMoments cm = model_moments(gamma, model);
    return log_gaussian_outage(cm, rate_from_mux(r, def, gamma, cm, model.rank()));
}

DmtPoint model_dmt_point(const ChannelModel& model, SnrPoint gamma, double r, const MuxGainDef& def, double step)
{
    const CapacityMoments cm = model_moments(gamma, model);
    DmtPoint pt{};
    pt.gamma = gamma;
    pt.r = r;
    pt.rate = rate_from_mux(r, def, gamma, cm, model.rank());
    pt.log_p_out = log_gaussian_outage(cm, pt.rate);
    pt.p_out = std::exp(pt.log_p_out);
    if (cm.flags != moment_flags::none)
        pt.flags |= dmt_flags::moments_flagged;

    if (gamma.linear() > 1.0)
        pt.d_gamma = -pt.log_p_out / gamma.ln();
    else
        pt.d_gamma = std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(pt.d_gamma))
        pt.flags |= dmt_flags::infinite_diversity;

    pt.d_prime = d_prime_numeric_log([&](SnrPoint g) { return model_log_outage(model, g, r, def); }, gamma, step);
    pt.c_gamma = std::exp(pt.log_p_out + pt.d_prime * gamma.ln());
    return pt;
}

} // namespace fsdmt
