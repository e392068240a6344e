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

#include <benchmark/benchmark.h>

#include <fsdmt/dmt.hpp>
#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>
#include <fsdmt/oracle.hpp>
#include <fsdmt/rng.hpp>

using namespace fsdmt;

static void BM_PhiloxBlock(benchmark::State& state)
{
    Philox4x32::Counter ctr{0, 0, 0, 0};
    for (auto _ : state)
    {
        ++ctr[0];
        benchmark::DoNotOptimize(Philox4x32::block(ctr, {1, 2}));
    }
}
BENCHMARK(BM_PhiloxBlock);

static void BM_SampleChannel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto model = ChannelModel::iid(ChannelDims(n, n));
    std::uint64_t t = 0;
    for (auto _ : state)
    {
        CounterStream stream(1, t++);
        benchmark::DoNotOptimize(sample_channel(model, stream));
    }
}
BENCHMARK(BM_SampleChannel)->Arg(2)->Arg(10)->Arg(16);

static void BM_Capacity(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto model = ChannelModel::iid(ChannelDims(n, n));
    CounterStream stream(7, 0);
    const CMatrix h = sample_channel(model, stream);
    for (auto _ : state)
        benchmark::DoNotOptimize(capacity(h, SnrPoint(10.0), ModelKind::iid));
}
BENCHMARK(BM_Capacity)->Arg(1)->Arg(2)->Arg(4)->Arg(10)->Arg(16);

static void BM_EstimateOutage2x2(benchmark::State& state)
{
    SimConfig cfg{ChannelModel::iid(ChannelDims(2, 2)), {SnrPoint(10.0)}};
    cfg.target = MuxTarget{MeanCapacity{}, 1.0};
    cfg.trials = 100000;
    cfg.seed = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_outage(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}
BENCHMARK(BM_EstimateOutage2x2)->Unit(benchmark::kMillisecond);

static void BM_IidMoments(benchmark::State& state)
{
    double g = 1.0;
    for (auto _ : state)
    {
        g = g < 1e6 ? g * 1.01 : 1.0;
        benchmark::DoNotOptimize(iid_moments(SnrPoint(g), ChannelDims(10, 10)));
    }
}
BENCHMARK(BM_IidMoments);

static void BM_ModelDmtPoint(benchmark::State& state)
{
    const auto model = ChannelModel::iid(ChannelDims(10, 10));
    for (auto _ : state)
        benchmark::DoNotOptimize(model_dmt_point(model, SnrPoint(1000.0), 9.0, MeanCapacity{}));
}
BENCHMARK(BM_ModelDmtPoint);

static void BM_Wishart2x2Oracle(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(wishart2x2_outage(SnrPoint(10.0), Rate(1.5)));
}
BENCHMARK(BM_Wishart2x2Oracle)->Unit(benchmark::kMillisecond);

static void BM_KeyholeOracle(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(single_keyhole_outage(SnrPoint(10.0), Rate(1.0), ChannelDims(8, 8)));
}
BENCHMARK(BM_KeyholeOracle)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
