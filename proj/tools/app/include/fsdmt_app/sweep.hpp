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

#ifndef FSDMT_APP_SWEEP_HPP
#define FSDMT_APP_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsdmt_app/request.hpp"
#include "fsdmt_app/table.hpp"

namespace fsdmt::app
{

struct SweepResult
{
    Table table;
    int exit_code = 0;
    std::vector<std::string> notes; // diagnostics for standard error
};

/// Exact outage law for a model, when one is available.
struct ExactOracle
{
    std::string name;
    std::function<double(SnrPoint, Rate)> outage;
};

std::optional<ExactOracle> find_oracle(const ChannelModel& model);

/// Column set of a command; a pure function of the command (figures excepted).
std::vector<std::string> columns_for(Command command);

/// Runs one command. Library errors are caught and mapped to an exit code; grid
/// points where the rate is undefined are kept as rows with a flag.
SweepResult run_sweep(const SweepRequest& req);

/// Three-way comparison of the Gaussian model, Monte-Carlo and the exact oracle.
/// Throws Error(ErrorKind::configuration) when the request has no trials.
SweepResult validate(const SweepRequest& req);

/// Figure presets fig1..fig7.
SweepResult run_figure(const SweepRequest& req);

/// Tolerances of the validate command.
struct ValidateGates
{
    double model_factor = 3.0;       // model vs oracle, multiplicative
    double model_window_lo = 1e-4;   // oracle outage range where the model gate applies
    double model_window_hi = 0.5;
    double mc_sigmas = 3.0;          // Monte-Carlo vs oracle, binomial standard errors
    double mc_floor = 1e-4;          // smallest p_hat the Monte-Carlo gate applies to
};

} // namespace fsdmt::app

#endif
