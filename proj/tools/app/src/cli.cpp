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

#include "fsdmt_app/cli.hpp"

#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "fsdmt_app/sweep.hpp"

namespace fsdmt::app
{

namespace
{

void add_common_options(CLI::App& app, SweepRequest& req, std::string& snr_text)
{
    app.add_option("--model", req.model, "Channel model")->check(CLI::IsMember({"iid", "kronecker", "keyhole"}));
    app.add_option("--m", req.m, "Transmit antennas");
    app.add_option("--n", req.n, "Receive antennas");
    app.add_option("--snr-db", snr_text, "SNR grid start:stop:step in dB");
    app.add_option("--mux", req.mux, "Multiplexing-gain definition")
        ->check(CLI::IsMember({"rawlog", "offsetlog", "meancap"}));
    app.add_option("--r", req.r, "Multiplexing gain");
    app.add_option("--rate-nats", req.rate, "Fixed rate (in --units), overrides --mux/--r");
    app.add_option("--trials", req.trials, "Monte-Carlo trials");
    app.add_option("--seed", req.seed, "Monte-Carlo seed");
    app.add_option("--workers", req.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--scenario", req.scenario, "JSON scenario file");
    app.add_option("--out", req.out, "Output path (default: standard output)");
    app.add_option("--format", req.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
    app.add_option("--units", req.units, "Units of capacity values and --rate-nats")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Units>{{"nats", Units::nats}, {"bits", Units::bits}}));
    app.add_option("--rho-t", req.rho_t, "Exponential transmit correlation (kronecker)");
    app.add_option("--rho-r", req.rho_r, "Exponential receive correlation (kronecker)");
    app.add_option("--entry-dist", req.entry_dist, "Entry distribution (iid)")
        ->check(CLI::IsMember({"gaussian", "two_point"}));
}

void emit(const SweepResult& res, const SweepRequest& req, std::ostream& out)
{
    std::ofstream file;
    std::ostream* dest = &out;
    if (!req.out.empty())
    {
        file.open(req.out, std::ios::binary);
        if (!file)
            throw Error(ErrorKind::configuration, "cannot open output file " + req.out);
        dest = &file;
    }
    if (req.format == Format::json)
        write_json(res.table, *dest);
    else
        write_csv(res.table, *dest);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite-SNR diversity-multiplexing tradeoff toolkit"};
    app.require_subcommand(1);

    SweepRequest req;
    std::string snr_text;
    add_common_options(app, req, snr_text);

    const std::map<std::string, Command> commands{
        {"moments", Command::moments}, {"outage", Command::outage},     {"dmt", Command::dmt},
        {"offset", Command::offset},   {"mc", Command::mc},             {"oracle", Command::oracle},
        {"validate", Command::validate}, {"figure", Command::figure},
    };
    const std::map<std::string, std::string> help{
        {"moments", "Capacity mean and variance"},
        {"outage", "Gaussian-model outage probability"},
        {"dmt", "Finite-SNR diversity gains and outage offset"},
        {"offset", "Outage offset with closed forms where available"},
        {"mc", "Monte-Carlo outage, moments and diversity"},
        {"oracle", "Exact small-system outage"},
        {"validate", "Model vs Monte-Carlo vs exact outage report"},
        {"figure", "Figure presets fig1..fig7"},
    };
    for (const auto& [name, cmd] : commands)
    {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->fallthrough();
        if (cmd == Command::figure)
            sub->add_option("name", req.figure, "fig1..fig7")->required();
        sub->callback([&req, cmd = cmd] { req.command = cmd; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << e.what() << '\n';
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try
    {
        if (!snr_text.empty())
            req.snr = SnrRange::parse(snr_text);
        req.trials_explicit = app.count("--trials") > 0;
        const SweepResult res = run_sweep(req);
        for (const auto& note : res.notes)
            err << note << '\n';
        if (res.exit_code != 0)
            return res.exit_code;
        emit(res, req, out);
        return 0;
    }
    catch (const Error& e)
    {
        err << to_string(e.kind()) << " error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace fsdmt::app
