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

#include "fsdmt/qfunc.hpp"

#include <cmath>
#include <numbers>

#include "fsdmt/error.hpp"

namespace fsdmt
{

namespace
{

// Beyond this point 0.5 erfc(z / sqrt 2) approaches the subnormal range.
constexpr double erfc_switch = 35.0;

double log_q_asymptotic(double z)
{
    const double u = 1.0 / (z * z);
    const double series = 1.0 + u * (-1.0 + u * (3.0 + u * (-15.0 + u * 105.0)));
    return -0.5 * z * z - std::log(z * std::sqrt(2.0 * std::numbers::pi)) + std::log(series);
}

} // namespace

double q_function(double z)
{
    if (z > erfc_switch)
        return std::exp(log_q_asymptotic(z));
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double log_q(double z)
{
    if (z > erfc_switch)
        return log_q_asymptotic(z);
    if (z < 0.0)
        return std::log1p(-0.5 * std::erfc(-z / std::numbers::sqrt2));
    return std::log(0.5 * std::erfc(z / std::numbers::sqrt2));
}

double q_upper_bound(double z)
{
    return 0.5 * std::exp(-0.5 * z * z);
}

double q_tail_approx(double z)
{
    require(z > 0.0, ErrorKind::domain, "tail approximation needs z > 0");
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * z);
}

} // namespace fsdmt
