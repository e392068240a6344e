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

#ifndef FSDMT_APP_DETAIL_HPP
#define FSDMT_APP_DETAIL_HPP

#include <optional>
#include <string>
#include <vector>

#include <fsdmt/channel.hpp>
#include <fsdmt/dmt.hpp>

#include "fsdmt_app/request.hpp"

namespace fsdmt::app::detail
{

std::string join_flags(const std::vector<std::string>& flags);

/// Rate of the request at gamma: the fixed rate when given, else rate_from_mux.
/// Returns nullopt where the multiplexing-gain definition is out of its regime.
std::optional<Rate> rate_at(const SweepRequest& req, const ChannelModel& model, const MuxGainDef& mux, SnrPoint gamma);

std::vector<SnrPoint> grid(const std::vector<double>& db);

double units_scale(Units u) noexcept; // 1 for nats, 1 / ln 2 for bits

} // namespace fsdmt::app::detail

#endif
