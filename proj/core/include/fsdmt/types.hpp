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

#ifndef FSDMT_TYPES_HPP
#define FSDMT_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "fsdmt/error.hpp"

namespace fsdmt
{

/// Antenna counts of an n x m channel: m transmit, n receive.
class ChannelDims
{
public:
    ChannelDims(int m, int n) : m_(m), n_(n)
    {
        require(m >= 1 && n >= 1, ErrorKind::parameter, "antenna counts must be positive");
    }

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int min_dim() const noexcept { return std::min(m_, n_); }
    int max_dim() const noexcept { return std::max(m_, n_); }
    bool square() const noexcept { return m_ == n_; }

    /// m / n
    double beta() const noexcept { return static_cast<double>(m_) / n_; }
    /// min(m, n) / max(m, n), in (0, 1]
    double beta_star() const noexcept { return static_cast<double>(min_dim()) / max_dim(); }

    friend bool operator==(const ChannelDims&, const ChannelDims&) = default;

private:
    int m_;
    int n_;
};

/// Average SNR as a linear power ratio.
class SnrPoint
{
public:
    explicit SnrPoint(double gamma) : gamma_(gamma)
    {
        require(gamma > 0.0 && !std::isnan(gamma), ErrorKind::parameter, "SNR must be positive");
    }

    static SnrPoint from_db(double db) { return SnrPoint(std::pow(10.0, db / 10.0)); }

    double linear() const noexcept { return gamma_; }
    double db() const noexcept { return 10.0 * std::log10(gamma_); }
    double ln() const noexcept { return std::log(gamma_); }

    /// gamma * e^{delta}, used for stencils in ln(gamma)
    SnrPoint scaled_log(double delta) const { return SnrPoint(gamma_ * std::exp(delta)); }

    friend auto operator<=>(const SnrPoint&, const SnrPoint&) = default;

private:
    double gamma_;
};

/// Capacity power offset a in  C ~ m* ln(gamma / a). May be +inf for a singular
/// receive correlation (the offset is then undefined and flagged by the caller).
class PowerOffset
{
public:
    explicit PowerOffset(double a) : a_(a)
    {
        require(a > 0.0 && !std::isnan(a), ErrorKind::parameter, "power offset must be positive");
    }

    double value() const noexcept { return a_; }
    bool finite() const noexcept { return std::isfinite(a_); }

private:
    double a_;
};

/// Spatial degrees of freedom m* = min(m, n, M).
class ChannelRank
{
public:
    explicit ChannelRank(int m_star) : m_star_(m_star)
    {
        require(m_star >= 1, ErrorKind::parameter, "channel rank must be positive");
    }

    int value() const noexcept { return m_star_; }

private:
    int m_star_;
};

/// Transmission rate in nats per channel use. +inf is allowed as a sentinel.
class Rate
{
public:
    explicit Rate(double nats) : nats_(nats)
    {
        require(nats >= 0.0, ErrorKind::parameter, "rate must be nonnegative");
    }

    static Rate from_bits(double bits) { return Rate(bits * std::log(2.0)); }

    double nats() const noexcept { return nats_; }
    double bits() const noexcept { return nats_ / std::log(2.0); }

private:
    double nats_;
};

namespace moment_flags
{
inline constexpr std::uint32_t none = 0;
inline constexpr std::uint32_t extreme_aspect = 1u << 0;       // beta < 0.05 or beta > 20
inline constexpr std::uint32_t short_transmit_array = 1u << 1; // Kronecker with m < 4n
inline constexpr std::uint32_t singular_receive = 1u << 2;     // det R_r = 0, offset undefined
} // namespace moment_flags

/// Mean and variance of the instantaneous capacity (nats, nats^2) at one SNR.
struct CapacityMoments
{
    double mean_nats = 0.0;
    double var_nats2 = 0.0;
    SnrPoint gamma{1.0};
    std::uint32_t flags = moment_flags::none;

    double stddev() const noexcept { return std::sqrt(var_nats2); }
};

/// Moments together with the capacity power offset of the same model.
struct OffsetMoments
{
    CapacityMoments moments;
    PowerOffset offset{1.0};
};

inline double nats_to_bits(double nats) noexcept { return nats / std::log(2.0); }

} // namespace fsdmt

#endif
