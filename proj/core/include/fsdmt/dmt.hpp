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

#ifndef FSDMT_DMT_HPP
#define FSDMT_DMT_HPP

#include <cstdint>
#include <functional>
#include <numbers>
#include <string_view>
#include <variant>
#include <vector>

#include "fsdmt/channel.hpp"
#include "fsdmt/types.hpp"

namespace fsdmt
{

// ---------------------------------------------------------------------------
// Multiplexing-gain definitions
// ---------------------------------------------------------------------------

/// r = R / ln(gamma)
struct RawLog
{
};

/// r = R / ln(gamma / a)
struct OffsetLog
{
    PowerOffset a{std::numbers::e};
};

/// r = m* R / mean capacity
struct MeanCapacity
{
};

using MuxGainDef = std::variant<RawLog, OffsetLog, MeanCapacity>;

std::string_view mux_name(const MuxGainDef& def) noexcept; // "rawlog", "offsetlog", "meancap"

/// OffsetLog using the model's own capacity power offset.
MuxGainDef offset_log_for(const ChannelModel& model);

/// Rate implied by multiplexing gain r. Throws ErrorKind::regime when r > 0 and the
/// log argument is not above one (gamma <= 1 for RawLog, gamma <= a for OffsetLog).
Rate rate_from_mux(double r, const MuxGainDef& def, SnrPoint gamma, const CapacityMoments& moments, ChannelRank rank);

// ---------------------------------------------------------------------------
// Diversity and offset from an outage curve
// ---------------------------------------------------------------------------

inline constexpr double default_log_step = 0.05;

/// -ln(p) / ln(gamma). Returns +inf when p = 0. Throws ErrorKind::regime for gamma <= 1.
double d_gamma_from_outage(double p_out, SnrPoint gamma);

/// Central difference -d ln p / d ln gamma with step `step` in ln gamma.
/// Throws ErrorKind::precision if p underflows to zero inside the stencil.
double d_prime_numeric(const std::function<double(SnrPoint)>& p_out_fn, SnrPoint gamma,
                       double step = default_log_step);

/// Same stencil on a function that already returns ln p.
double d_prime_numeric_log(const std::function<double(SnrPoint)>& log_p_fn, SnrPoint gamma,
                           double step = default_log_step);

/// c = p gamma^{d'}, evaluated as exp(ln p + d' ln gamma).
double snr_offset_c(double p_out, double d_prime, SnrPoint gamma);

/// min(1, c gamma^{-d'}), evaluated in the log domain.
double outage_from_dmt(double c, double d_prime, SnrPoint gamma);

// ---------------------------------------------------------------------------
// Asymptotic references
// ---------------------------------------------------------------------------

/// (n - r)(m - r) at integer r, linear in between.
double zheng_tse_dmt(ChannelDims dims, double r);

/// min(m, n)(1 - r) for the single keyhole channel, 0 <= r <= 1.
double keyhole_dmt_asymptotic(ChannelDims dims, double r);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

struct DiversityPair
{
    double d_gamma;
    double d_prime;
};

using MomentProvider = std::function<CapacityMoments(SnrPoint)>;

/// Diversity of the Gaussian outage model under the MeanCapacity definition.
/// d_gamma = (C1 / sigma)^2 (m* - r)^2 / (2 ln gamma) with C1 = mean / m*, and d_prime is
/// half the ln-gamma derivative of (C1 / sigma)^2 times (m* - r)^2, taken numerically.
/// Throws ErrorKind::degenerate for zero variance and ErrorKind::regime for gamma <= 1.
DiversityPair prop2_dmt(const MomentProvider& moments, SnrPoint gamma, double r, ChannelRank rank,
                        double step = default_log_step);
DiversityPair prop2_dmt(const ChannelModel& model, SnrPoint gamma, double r, double step = default_log_step);

namespace dmt_flags
{
inline constexpr std::uint32_t none = 0;
inline constexpr std::uint32_t approximation_out_of_range = 1u << 0; // closed-form offset outside its validity gate
inline constexpr std::uint32_t offset_vanishes = 1u << 1;            // r = 0: the offset tends to zero
inline constexpr std::uint32_t infinite_diversity = 1u << 2;         // p_out = 0
inline constexpr std::uint32_t regime_skipped = 1u << 3;             // rate undefined at this SNR
inline constexpr std::uint32_t moments_flagged = 1u << 4;            // the moment provider raised a flag
} // namespace dmt_flags

struct Th4Result
{
    double d_prime;
    double d_gamma;
    double c_gamma;
    std::uint32_t flags = dmt_flags::none;
};

/// Square i.i.d. channel, MeanCapacity definition.
/// d' = (n - r)^2 (1 - 1 / (2 sqrt gamma)), d = (n - r)^2 (1 + 2 / (sqrt(gamma) ln(gamma / e))),
/// c = e^d / sqrt(4 pi d ln(gamma / e)). The offset is flagged (and NaN when undefined) unless
/// d ln(gamma / e) > 1 and 0 < r < n. r = n gives d = d' = 0 and c = 1/2.
Th4Result th4_dmt(int n, double r, SnrPoint gamma);

struct Prop3Result
{
    double d_prime;
    double c_gamma_limit;
};

/// Square i.i.d. channel under RawLog or OffsetLog. Throws ErrorKind::parameter for the
/// MeanCapacity definition and ErrorKind::regime for gamma <= e.
Prop3Result prop3_dmt(int n, double r, SnrPoint gamma, const MuxGainDef& def);

struct ThresholdConfig
{
    double accuracy = 0.1;             // relative distance of d' from d(r)
    double log_term_coefficient = 3.0; // rounded 1 / sqrt(accuracy) in the RawLog bound
};

/// SNR above which the closed-form d' is within `accuracy` of d(r). +inf for r = n.
SnrPoint convergence_threshold(const MuxGainDef& def, int n, double r, const ThresholdConfig& cfg = {});

/// Non-square i.i.d. channel, MeanCapacity definition:
/// d' = (m* - r)^2 ln(gamma / a) / (-ln(1 - beta*)), d = d' / 2, a the i.i.d. offset for beta = m / n.
/// Throws ErrorKind::regime for m = n or gamma <= a.
DiversityPair prop4_dmt(ChannelDims dims, double r, SnrPoint gamma);

/// min(prop4 d', zheng_tse_dmt)
double combined_dmt(ChannelDims dims, double r, SnrPoint gamma);

/// SNR where the prop4 branch reaches the Zheng-Tse value. +inf for r = m*.
SnrPoint combined_crossover(ChannelDims dims, double r);

/// Correlated Kronecker channel, n << m:
/// (n - r)^2 ln(gamma / a) / (n (||R_t||_F / m)^2), a = (det R_r)^(-1/n).
/// Throws ErrorKind::rank for singular R_r and ErrorKind::regime for gamma <= a.
double th5_dmt(ChannelDims dims, double r, SnrPoint gamma, const CorrelationMatrix& rt, const CorrelationMatrix& rr);

/// Multi-keyhole channel with M modes:
/// (M - r)^2 ln(gamma / a) / sum_k(beta_tk ||R_tk||^2 / m^2 + beta_rk ||R_rk||^2 / n^2).
double th6_dmt(ChannelDims dims, double r, SnrPoint gamma, const std::vector<KeyholeMode>& modes);

// ---------------------------------------------------------------------------
// Model evaluation
// ---------------------------------------------------------------------------

/// One (SNR, r) evaluation of the Gaussian outage model.
struct DmtPoint
{
    SnrPoint gamma{1.0};
    double r = 0.0;
    Rate rate{0.0};
    double p_out = 0.0;
    double log_p_out = 0.0;
    double d_gamma = 0.0;
    double d_prime = 0.0;
    double c_gamma = 0.0;
    std::uint32_t flags = dmt_flags::none;
};

/// Natural log of the Gaussian-model outage at multiplexing gain r (rate re-derived at gamma).
double model_log_outage(const ChannelModel& model, SnrPoint gamma, double r, const MuxGainDef& def);

/// Full evaluation at one point: rate, outage, d_gamma, d' (central difference on ln P_out
/// at fixed r) and c_gamma. Rate regime errors propagate; d_gamma is NaN for gamma <= 1.
DmtPoint model_dmt_point(const ChannelModel& model, SnrPoint gamma, double r, const MuxGainDef& def,
                         double step = default_log_step);

} // namespace fsdmt

#endif
