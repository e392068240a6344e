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

#ifndef FSDMT_SCENARIO_HPP
#define FSDMT_SCENARIO_HPP

#include <string>
#include <vector>

#include "fsdmt/channel.hpp"

namespace fsdmt
{

/// A channel model loaded from a JSON scenario, together with the notes produced
/// while loading it (one per trace renormalization, with the applied scale factor).
struct Scenario
{
    ChannelModel model;
    std::vector<std::string> notes;
};

/// Parse a scenario document.
///
/// Keys: "model" ("iid" | "kronecker" | "keyhole"), "m", "n", "entry_dist"
/// ("gaussian" | "two_point", i.i.d. only), "rt" / "rr" for Kronecker, and "modes" for
/// keyhole, a list of {"b": [re, im], "rt", "rr", "beta_t", "beta_r"}. A correlation is
/// either {"type": "exp", "rho": x} or {"type": "explicit", "rows": [[...], ...]} where
/// each entry is a real number or an [re, im] pair. Missing correlations default to the
/// identity. Explicit matrices are rescaled to tr R_t = m and tr R_r = n.
///
/// Throws Error(ErrorKind::data) on malformed input.
Scenario parse_scenario(const std::string& json_text);

/// Read and parse a scenario file. Throws Error(ErrorKind::data) if it cannot be read.
Scenario load_scenario(const std::string& path);

} // namespace fsdmt

#endif
