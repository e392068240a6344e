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

#ifndef FSDMT_ORACLE_HPP
#define FSDMT_ORACLE_HPP

#include "fsdmt/types.hpp"

namespace fsdmt
{

struct QuadratureSpec
{
    double tolerance = 1e-8; // relative, in (0, 1e-2]
    unsigned max_depth = 15; // adaptive bisection depth

    void validate() const;

    /// Upper cut-off for integrals against e^{-x}: 50 + 10 ln(1 / tolerance).
    double truncation() const;
};

/// Exact outage of the 1 x 1 Rayleigh channel: 1 - exp(-(e^R - 1) / gamma).
double siso_rayleigh_outage(SnrPoint gamma, Rate rate);

/// Exact outage of a Rayleigh channel with min(m, n) = 1:
/// P(max(m, n), m (e^R - 1) / gamma), P the regularized lower incomplete gamma function.
double vector_rayleigh_outage(SnrPoint gamma, Rate rate, ChannelDims dims);

/// Exact outage of the 2 x 2 i.i.d. Rayleigh channel by adaptive quadrature of the
/// unordered Wishart eigenvalue density K (l1 - l2)^2 e^{-l1 - l2}, with K fixed by
/// normalizing the same quadrature over the quadrant.
/// Throws ErrorKind::precision when the error estimate exceeds the tolerance.
double wishart2x2_outage(SnrPoint gamma, Rate rate, const QuadratureSpec& spec = {});

/// Integral of the unnormalized 2 x 2 Wishart density over the truncated quadrant (2 in exact arithmetic).
double wishart2x2_density_mass(const QuadratureSpec& spec = {});

/// Exact outage of the single-keyhole channel with identity correlations and Gaussian
/// modal vectors, gamma the total SNR: Pr[x y < m n (e^R - 1) / (gamma |b|^2)] with
/// x ~ Gamma(m, 1), y ~ Gamma(n, 1).
double single_keyhole_outage(SnrPoint gamma, Rate rate, ChannelDims dims, double b_gain = 1.0,
                             const QuadratureSpec& spec = {});

} // namespace fsdmt

#endif
