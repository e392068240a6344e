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

#ifndef FSDMT_APP_REQUEST_HPP
#define FSDMT_APP_REQUEST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <fsdmt/dmt.hpp>
#include <fsdmt/error.hpp>
#include <fsdmt/scenario.hpp>

namespace fsdmt::app
{

enum class Command
{
    moments,
    outage,
    dmt,
    offset,
    mc,
    oracle,
    validate,
    figure,
};

enum class Format
{
    csv,
    json,
};

enum class Units
{
    nats,
    bits,
};

/// Inclusive dB grid start:stop:step.
struct SnrRange
{
    double start_db = 0.0;
    double stop_db = 30.0;
    double step_db = 1.0;

    /// Parses "a:b:s" (or a single value "a"). Throws Error(ErrorKind::parameter).
    static SnrRange parse(const std::string& text);

    void validate() const;
    std::vector<double> db_values() const;
};

struct SweepRequest
{
    Command command = Command::moments;
    std::string figure; // fig1..fig7 for Command::figure

    std::string model = "iid"; // iid | kronecker | keyhole
    int m = 2;
    int n = 2;
    double rho_t = 0.0; // exponential correlation for the built-in Kronecker model
    double rho_r = 0.0;
    std::string entry_dist = "gaussian";
    std::optional<std::string> scenario;

    SnrRange snr;
    std::string mux = "meancap"; // rawlog | offsetlog | meancap
    double r = 1.0;
    std::optional<double> rate; // fixed rate in `units`, overrides (mux, r)

    std::size_t trials = 100000;
    bool trials_explicit = false; // figure presets use their own count unless set
    std::uint64_t seed = 1;
    unsigned workers = 1;

    std::string out; // empty: standard output
    Format format = Format::csv;
    Units units = Units::nats;

    /// Throws Error with ErrorKind::parameter or ErrorKind::configuration.
    void validate() const;
};

/// Model described by the request: the scenario file when given, otherwise the flags.
Scenario build_model(const SweepRequest& req);

/// Multiplexing-gain definition named by the request, with OffsetLog using the model's offset.
MuxGainDef build_mux(const std::string& name, const ChannelModel& model);

/// Process exit code: 2 for parameter-type failures, 3 for regime failures, 4 for precision.
int exit_code_for(ErrorKind kind) noexcept;

std::string_view to_string(Command c) noexcept;

} // namespace fsdmt::app

#endif
