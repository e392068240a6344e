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

#include "fsdmt/channel.hpp"

#include <cmath>

#include "fsdmt/error.hpp"

namespace fsdmt
{

namespace
{

constexpr double trace_tolerance = 1e-9;

void require_trace(const CorrelationMatrix& r, int size, const char* message)
{
    require(r.size() == size, ErrorKind::parameter, "correlation matrix has the wrong size");
    require(std::abs(r.trace() / size - 1.0) <= trace_tolerance, ErrorKind::parameter, message);
}

} // namespace

std::string_view to_string(EntryDistribution dist) noexcept
{
    switch (dist)
    {
    case EntryDistribution::gaussian:
        return "gaussian";
    case EntryDistribution::two_point:
        return "two_point";
    }
    return "unknown";
}

std::string_view to_string(ModelKind kind) noexcept
{
    switch (kind)
    {
    case ModelKind::iid:
        return "iid";
    case ModelKind::kronecker:
        return "kronecker";
    case ModelKind::keyhole:
        return "keyhole";
    }
    return "unknown";
}

ChannelModel ChannelModel::iid(ChannelDims dims, EntryDistribution dist)
{
    return ChannelModel(IidUnitVariance{dims, dist});
}

ChannelModel ChannelModel::kronecker(ChannelDims dims, CorrelationMatrix rt, CorrelationMatrix rr)
{
    require_trace(rt, dims.m(), "transmit correlation must satisfy tr R_t = m");
    require_trace(rr, dims.n(), "receive correlation must satisfy tr R_r = n");
    CMatrix st = matrix_sqrt_psd(rt);
    CMatrix sr = matrix_sqrt_psd(rr);
    return ChannelModel(KroneckerRayleigh{dims, std::move(rt), std::move(rr), std::move(st), std::move(sr)});
}

ChannelModel ChannelModel::keyhole(ChannelDims dims, std::vector<KeyholeMode> modes)
{
    require(!modes.empty(), ErrorKind::parameter, "keyhole model needs at least one mode");
    MultiKeyhole model{dims, {}, {}, {}};
    for (auto& mode : modes)
    {
        require(mode.gain() > 0.0 && std::isfinite(mode.gain()), ErrorKind::parameter,
                "keyhole modal amplitude must be nonzero");
        require(mode.beta_t >= 0.0 && mode.beta_r >= 0.0, ErrorKind::parameter,
                "modal moment parameters must be nonnegative");
        require_trace(mode.rt, dims.m(), "modal transmit correlation must satisfy tr R_t = m");
        require_trace(mode.rr, dims.n(), "modal receive correlation must satisfy tr R_r = n");
        model.rt_sqrt.push_back(matrix_sqrt_psd(mode.rt));
        model.rr_sqrt.push_back(matrix_sqrt_psd(mode.rr));
        model.modes.push_back(std::move(mode));
    }
    return ChannelModel(std::move(model));
}

ChannelModel ChannelModel::single_keyhole(ChannelDims dims, std::complex<double> b)
{
    KeyholeMode mode{b, CorrelationMatrix::identity(dims.m()), CorrelationMatrix::identity(dims.n()), 1.0, 1.0};
    return keyhole(dims, {std::move(mode)});
}

ModelKind ChannelModel::kind() const noexcept
{
    switch (model_.index())
    {
    case 0:
        return ModelKind::iid;
    case 1:
        return ModelKind::kronecker;
    default:
        return ModelKind::keyhole;
    }
}

const ChannelDims& ChannelModel::dims() const noexcept
{
    return std::visit([](const auto& m) -> const ChannelDims& { return m.dims; }, model_);
}

ChannelRank ChannelModel::rank() const
{
    int r = dims().min_dim();
    if (const auto* k = std::get_if<MultiKeyhole>(&model_))
        r = std::min(r, static_cast<int>(k->modes.size()));
    return ChannelRank(r);
}

} // namespace fsdmt
