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

#ifndef FSDMT_CHANNEL_HPP
#define FSDMT_CHANNEL_HPP

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

#include "fsdmt/correlation.hpp"
#include "fsdmt/types.hpp"

namespace fsdmt
{

enum class EntryDistribution
{
    gaussian,  // circular complex Gaussian, unit variance
    two_point, // 0 or sqrt(2) e^{i theta} with probability 1/2 each
};

enum class ModelKind
{
    iid,
    kronecker,
    keyhole,
};

std::string_view to_string(EntryDistribution dist) noexcept;
std::string_view to_string(ModelKind kind) noexcept;

/// One rank-one mode b * h_r h_t^+ of a multi-keyhole channel.
struct KeyholeMode
{
    std::complex<double> b;
    CorrelationMatrix rt;
    CorrelationMatrix rr;
    double beta_t = 1.0; // central second moment of |g_t|^2
    double beta_r = 1.0; // central second moment of |g_r|^2

    double gain() const noexcept { return std::norm(b); }
};

struct IidUnitVariance
{
    ChannelDims dims;
    EntryDistribution dist;
};

struct KroneckerRayleigh
{
    ChannelDims dims;
    CorrelationMatrix rt;
    CorrelationMatrix rr;
    CMatrix rt_sqrt;
    CMatrix rr_sqrt;
};

struct MultiKeyhole
{
    ChannelDims dims;
    std::vector<KeyholeMode> modes;
    std::vector<CMatrix> rt_sqrt;
    std::vector<CMatrix> rr_sqrt;
};

/// A fading ensemble. Immutable after construction; the factories validate the
/// ensemble's invariants and precompute the correlation square roots used for sampling.
class ChannelModel
{
public:
    using Variant = std::variant<IidUnitVariance, KroneckerRayleigh, MultiKeyhole>;

    static ChannelModel iid(ChannelDims dims, EntryDistribution dist = EntryDistribution::gaussian);

    /// Requires tr R_t = m and tr R_r = n (relative tolerance 1e-9).
    static ChannelModel kronecker(ChannelDims dims, CorrelationMatrix rt, CorrelationMatrix rr);

    /// Requires at least one mode, |b_k|^2 > 0, tr R_tk = m and tr R_rk = n.
    static ChannelModel keyhole(ChannelDims dims, std::vector<KeyholeMode> modes);

    /// Single mode with identity correlations and Gaussian modal vectors.
    static ChannelModel single_keyhole(ChannelDims dims, std::complex<double> b = 1.0);

    ModelKind kind() const noexcept;
    const ChannelDims& dims() const noexcept;

    /// min(m, n, M)
    ChannelRank rank() const;

    const Variant& variant() const noexcept { return model_; }

    template <class T>
    const T& as() const
    {
        return std::get<T>(model_);
    }

private:
    explicit ChannelModel(Variant model) : model_(std::move(model)) {}

    Variant model_;
};

} // namespace fsdmt

#endif
