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

#ifndef FSDMT_MOMENTS_HPP
#define FSDMT_MOMENTS_HPP

#include <vector>

#include "fsdmt/channel.hpp"
#include "fsdmt/types.hpp"

namespace fsdmt
{

/// F(x, z) = (sqrt(x (1 + sqrt z)^2 + 1) - sqrt(x (1 - sqrt z)^2 + 1))^2
double f_tulino(double x, double z);

/// Size-asymptotic mean and variance of ln det(I + (gamma/m) H H^+) for an n x m
/// channel with i.i.d. zero-mean unit-variance entries (E|h|^4 = 2).
/// Sets moment_flags::extreme_aspect when m/n < 0.05 or m/n > 20.
CapacityMoments iid_moments(SnrPoint gamma, ChannelDims dims);

/// Capacity power offset of the i.i.d. channel:
/// e beta (1 - beta)^(1/beta - 1) for beta < 1, e for beta = 1, e (1 - 1/beta)^(beta - 1) for beta > 1.
PowerOffset iid_power_offset(ChannelDims dims);

/// High-SNR form: mean min(m, n) ln(gamma / a) and the limiting variance.
OffsetMoments iid_moments_highsnr(SnrPoint gamma, ChannelDims dims);

/// Two-term expansion for the square channel:
/// mean = n (ln(gamma / e) + 2 / sqrt(gamma)), variance = ln(gamma / 4) / 2 + 1 / sqrt(gamma).
CapacityMoments square_expansion_moments(SnrPoint gamma, int n);

/// Kronecker-correlated Rayleigh channel in the m >> n regime.
/// The offset is (det R_r)^(-1/n); it is +inf with moment_flags::singular_receive when
/// R_r is singular. moment_flags::short_transmit_array is set when m < 4n.
OffsetMoments kronecker_moments(SnrPoint gamma, ChannelDims dims, const CorrelationMatrix& rt,
                                const CorrelationMatrix& rr);

/// Multi-keyhole channel; gamma is the total SNR. Offset prod_k |b_k|^(-2/M).
OffsetMoments keyhole_moments(SnrPoint gamma, ChannelDims dims, const std::vector<KeyholeMode>& modes);

/// Dispatch on the model kind.
CapacityMoments model_moments(SnrPoint gamma, const ChannelModel& model);
PowerOffset model_power_offset(const ChannelModel& model);

/// Gaussian outage Q((mean - R) / sigma). With sigma = 0 this is a step:
/// 0 for R < mean, 1/2 for R = mean, 1 for R > mean.
double gaussian_outage(const CapacityMoments& moments, Rate rate);

/// ln of gaussian_outage, finite deep in the tail. -inf for the sigma = 0, R < mean case.
double log_gaussian_outage(const CapacityMoments& moments, Rate rate);

} // namespace fsdmt

#endif
