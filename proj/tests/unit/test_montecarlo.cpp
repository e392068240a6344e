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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>
#include <fsdmt/qfunc.hpp>

#include "expect_error.hpp"
#include "oracles.hpp"

using namespace fsdmt;

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

SimConfig make_config(ChannelModel model, std::vector<SnrPoint> grid, std::size_t trials, std::uint64_t seed)
{
    SimConfig cfg{std::move(model), std::move(grid)};
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

EmpiricalOutage synthetic_point(double gamma, std::size_t trials, std::size_t count)
{
    EmpiricalOutage e{};
    e.gamma = SnrPoint(gamma);
    e.trials = trials;
    e.count = count;
    e.p_hat = static_cast<double>(count) / trials;
    e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / trials);
    return e;
}

struct EntryStats
{
    double m2 = 0.0;
    double m4 = 0.0;
    double m2_se = 0.0;
    double m4_se = 0.0;
};

EntryStats entry_stats(const ChannelModel& model, int draws)
{
    double s2 = 0.0, s4 = 0.0, s8 = 0.0;
    int count = 0;
    for (int t = 0; t < draws; ++t)
    {
        CounterStream stream(99, t);
        const CMatrix h = sample_channel(model, stream);
        for (Eigen::Index i = 0; i < h.size(); ++i)
        {
            const double a = std::norm(h(i));
            s2 += a;
            s4 += a * a;
            s8 += a * a * a * a;
            ++count;
        }
    }
    EntryStats out;
    out.m2 = s2 / count;
    out.m4 = s4 / count;
    // Entries of one matrix are independent, so the per-entry standard error applies.
    out.m2_se = std::sqrt((out.m4 - out.m2 * out.m2) / count);
    out.m4_se = std::sqrt((s8 / count - out.m4 * out.m4) / count);
    return out;
}

} // namespace

TEST(SampleChannel, GaussianEntryMoments)
{
    const auto st = entry_stats(ChannelModel::iid(ChannelDims(2, 2)), 100000);
    EXPECT_NEAR(st.m2, 1.0, 3.0 * st.m2_se);
    EXPECT_NEAR(st.m4, 2.0, 3.0 * st.m4_se);
}

TEST(SampleChannel, TwoPointEntryMoments)
{
    const auto st = entry_stats(ChannelModel::iid(ChannelDims(2, 2), EntryDistribution::two_point), 100000);
    EXPECT_NEAR(st.m2, 1.0, 3.0 * st.m2_se);
    EXPECT_NEAR(st.m4, 2.0, 3.0 * st.m4_se);
}

TEST(SampleChannel, IdentityKroneckerMatchesIid)
{
    const ChannelDims dims(3, 2);
    const auto kron = ChannelModel::kronecker(dims, CorrelationMatrix::identity(3), CorrelationMatrix::identity(2));
    const SnrPoint g(10.0);
    const auto a = testsupport::sample_moments(capacity_samples(kron, g, 100000, 1));
    const auto b = testsupport::sample_moments(capacity_samples(ChannelModel::iid(dims), g, 100000, 2));
    EXPECT_NEAR(a.mean, b.mean, 3.0 * std::hypot(a.mean_se, b.mean_se));
    EXPECT_NEAR(a.var, b.var, 3.0 * std::hypot(a.var_se, b.var_se));
}

TEST(SampleChannel, SingleKeyholeIsRankOne)
{
    const auto model = ChannelModel::single_keyhole(ChannelDims(5, 4), {0.3, -1.1});
    for (int t = 0; t < 500; ++t)
    {
        CounterStream stream(3, t);
        const CMatrix h = sample_channel(model, stream);
        ASSERT_EQ(h.rows(), 4);
        ASSERT_EQ(h.cols(), 5);
        const Eigen::JacobiSVD<CMatrix> svd(h);
        const auto sv = svd.singularValues();
        EXPECT_LT(sv(1), 1e-10 * sv(0));
    }
}

TEST(Capacity, Examples)
{
    EXPECT_EQ(capacity(CMatrix::Zero(3, 2), SnrPoint(10.0), ModelKind::iid).nats(), 0.0);
    EXPECT_NEAR(capacity(CMatrix::Ones(1, 1), SnrPoint(1.0), ModelKind::iid).nats(), std::log(2.0), 1e-15);
    for (int n : {1, 2, 3, 7})
        EXPECT_NEAR(capacity(CMatrix::Identity(n, n), SnrPoint(n), ModelKind::iid).nats(), n * std::log(2.0), 1e-13);
    CMatrix bad = CMatrix::Ones(2, 2);
    bad(1, 0) = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    EXPECT_FSDMT_ERROR(capacity(bad, SnrPoint(1.0), ModelKind::iid), ErrorKind::data);
}

TEST(Capacity, Scaling)
{
    const ChannelDims dims(4, 3);
    EXPECT_DOUBLE_EQ(capacity_scale(dims, ModelKind::iid, SnrPoint(8.0)), 2.0);
    EXPECT_DOUBLE_EQ(capacity_scale(dims, ModelKind::kronecker, SnrPoint(8.0)), 2.0);
    EXPECT_DOUBLE_EQ(capacity_scale(dims, ModelKind::keyhole, SnrPoint(24.0)), 2.0);
}

TEST(Capacity, EigenvalueRouteMatchesDeterminant)
{
    std::mt19937_64 gen(8);
    std::normal_distribution<double> nd;
    for (auto [rows, cols] : {std::pair{1, 1}, {1, 4}, {2, 2}, {2, 5}, {3, 5}, {6, 2}, {8, 8}})
        for (int rep = 0; rep < 20; ++rep)
        {
            CMatrix h(rows, cols);
            for (Eigen::Index i = 0; i < h.size(); ++i)
                h(i) = {nd(gen), nd(gen)};
            const double s = std::exp(nd(gen));
            const double ref = testsupport::logdet_capacity(h, s);
            EXPECT_NEAR(capacity_from_eigenvalues(gram_eigenvalues(h), s), ref, 1e-12 * std::max(1.0, ref));
        }
}

TEST(EstimateOutage, TrivialRates)
{
    auto cfg = make_config(ChannelModel::iid(ChannelDims(2, 3)), {SnrPoint(1.0), SnrPoint(10.0)}, 5000, 4);
    cfg.target = Rate(0.0);
    for (const auto& e : estimate_outage(cfg))
        EXPECT_EQ(e.p_hat, 0.0);
    cfg.target = Rate(inf);
    for (const auto& e : estimate_outage(cfg))
        EXPECT_EQ(e.p_hat, 1.0);
}

TEST(EstimateOutage, RegimePointsAreSkipped)
{
    auto cfg = make_config(ChannelModel::iid(ChannelDims(2, 2)), {SnrPoint(0.5), SnrPoint(10.0)}, 2000, 4);
    cfg.target = MuxTarget{RawLog{}, 1.0};
    const auto out = estimate_outage(cfg);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_TRUE(out[0].skipped);
    EXPECT_FALSE(out[0].reliable());
    EXPECT_FALSE(out[1].skipped);
}

TEST(EstimateOutage, ConfigValidation)
{
    auto cfg = make_config(ChannelModel::iid(ChannelDims(2, 2)), {SnrPoint(10.0), SnrPoint(1.0)}, 100, 1);
    EXPECT_FSDMT_ERROR(cfg.validate(), ErrorKind::configuration);
    cfg.snr_grid = {SnrPoint(1.0)};
    cfg.trials = 0;
    EXPECT_FSDMT_ERROR(cfg.validate(), ErrorKind::configuration);
    cfg.trials = 10;
    cfg.target = MuxTarget{MeanCapacity{}, 2.5};
    EXPECT_FSDMT_ERROR(cfg.validate(), ErrorKind::parameter);
}

TEST(EstimateOutage, BitIdenticalAcrossWorkers)
{
    const std::vector<ChannelModel> models{
        ChannelModel::iid(ChannelDims(3, 3)),
        ChannelModel::kronecker(ChannelDims(8, 2), make_exponential_correlation(8, 0.7), make_exponential_correlation(2, 0.4)),
        ChannelModel::single_keyhole(ChannelDims(4, 4)),
    };
    for (const auto& model : models)
    {
        auto cfg = make_config(model, {SnrPoint(3.0), SnrPoint(10.0), SnrPoint(30.0)}, 10007, 1234);
        cfg.target = MuxTarget{MeanCapacity{}, 0.8};
        std::vector<std::vector<EmpiricalOutage>> outs;
        std::vector<std::vector<EmpiricalMoments>> moms;
        for (unsigned w : {1u, 4u, 16u})
        {
            cfg.workers = w;
            outs.push_back(estimate_outage(cfg));
            moms.push_back(estimate_moments(cfg));
        }
        for (std::size_t k = 1; k < outs.size(); ++k)
            for (std::size_t i = 0; i < outs[0].size(); ++i)
            {
                EXPECT_EQ(outs[k][i].count, outs[0][i].count);
                EXPECT_EQ(outs[k][i].p_hat, outs[0][i].p_hat);
                EXPECT_EQ(moms[k][i].moments.mean_nats, moms[0][i].moments.mean_nats);
                EXPECT_EQ(moms[k][i].moments.var_nats2, moms[0][i].moments.var_nats2);
                EXPECT_EQ(moms[k][i].var_std_error, moms[0][i].var_std_error);
            }
    }
}

TEST(EstimateOutage, TrialsUseOwnSubstreams)
{
    const auto model = ChannelModel::iid(ChannelDims(2, 3));
    const SnrPoint g(5.0);
    const auto batch = capacity_samples(model, g, 9000, 77, 3);
    for (std::size_t t : {0u, 1u, 4095u, 4096u, 8999u})
    {
        CounterStream stream(77, t);
        EXPECT_EQ(batch[t], capacity(sample_channel(model, stream), g, ModelKind::iid).nats());
    }
}

TEST(EstimateOutage, Fig2PointMatchesExactOracle)
{
    const auto model = ChannelModel::iid(ChannelDims(2, 2));
    const SnrPoint g(10.0);
    auto cfg = make_config(model, {g}, 1000000, 2);
    cfg.target = MuxTarget{MeanCapacity{}, 1.0};
    const auto e = estimate_outage(cfg).front();
    const double rate = iid_moments(g, ChannelDims(2, 2)).mean_nats / 2.0;
    EXPECT_DOUBLE_EQ(e.rate.nats(), rate);
    const double exact = testsupport::wishart2x2_reference(10.0, rate);
    EXPECT_NEAR(e.p_hat, exact, 3.0 * std::sqrt(exact * (1.0 - exact) / e.trials));
}

TEST(EstimateOutage, ReliabilityFloor)
{
    EXPECT_TRUE(synthetic_point(10.0, 1000, 10).reliable());
    EXPECT_FALSE(synthetic_point(10.0, 1000, 9).reliable());
}

TEST(EstimateMoments, Examples)
{
    auto low = make_config(ChannelModel::iid(ChannelDims(4, 4)), {SnrPoint(1e-9)}, 2000, 1);
    EXPECT_NEAR(estimate_moments(low).front().moments.mean_nats, 0.0, 1e-7);

    auto iid = make_config(ChannelModel::iid(ChannelDims(10, 10)), {SnrPoint(10.0)}, 100000, 6);
    const auto em = estimate_moments(iid).front();
    const auto cm = iid_moments(SnrPoint(10.0), ChannelDims(10, 10));
    EXPECT_NEAR(em.moments.mean_nats / cm.mean_nats, 1.0, 0.05);
    EXPECT_NEAR(em.moments.var_nats2 / cm.var_nats2, 1.0, 0.15);

    const auto kh = ChannelModel::single_keyhole(ChannelDims(8, 8));
    auto key = make_config(kh, {SnrPoint(10.0)}, 100000, 7);
    const auto ek = estimate_moments(key).front();
    const auto mk = model_moments(SnrPoint(10.0), kh);
    EXPECT_NEAR(ek.moments.mean_nats / mk.mean_nats, 1.0, 0.05);
    EXPECT_NEAR(ek.moments.var_nats2 / mk.var_nats2, 1.0, 0.25);
}

TEST(EstimateMoments, StandardErrorsMatchIndependentComputation)
{
    const auto model = ChannelModel::iid(ChannelDims(3, 2));
    auto cfg = make_config(model, {SnrPoint(7.0)}, 20000, 31);
    const auto em = estimate_moments(cfg).front();
    const auto ref = testsupport::sample_moments(capacity_samples(model, SnrPoint(7.0), 20000, 31));
    EXPECT_NEAR(em.moments.mean_nats, ref.mean, 1e-12);
    EXPECT_NEAR(em.moments.var_nats2, ref.var, 1e-12);
    EXPECT_NEAR(em.mean_std_error, ref.mean_se, 1e-12);
    EXPECT_NEAR(em.var_std_error, ref.var_se, 1e-9);
}

// Kronecker moments are m -> infinity limits; the claimed 3-sigma agreement at m = 4n with
// strong transmit correlation is checked as stated.
TEST(EstimateMoments, KroneckerWithinThreeStandardErrors)
{
    const auto model = ChannelModel::kronecker(ChannelDims(16, 4), make_exponential_correlation(16, 0.9),
                                               make_exponential_correlation(4, 0.5));
    auto cfg = make_config(model, {SnrPoint(10.0)}, 100000, 12);
    const auto em = estimate_moments(cfg).front();
    const auto cm = model_moments(SnrPoint(10.0), model);
    EXPECT_NEAR(em.moments.mean_nats, cm.mean_nats, 3.0 * em.mean_std_error);
    EXPECT_NEAR(em.moments.var_nats2, cm.var_nats2, 3.0 * em.var_std_error);
}

TEST(Gaussianity, KolmogorovSmirnov16x16)
{
    const ChannelDims dims(16, 16);
    const SnrPoint g(10.0);
    auto x = capacity_samples(ChannelModel::iid(dims), g, 100000, 21);
    std::sort(x.begin(), x.end());
    const auto cm = iid_moments(g, dims);
    const double n = static_cast<double>(x.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double f = 1.0 - q_function((x[i] - cm.mean_nats) / cm.stddev());
        ks = std::max({ks, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
    }
    EXPECT_LE(ks, 0.02);
}

TEST(EstimateDiversity, ExactPowerLaw)
{
    std::vector<EmpiricalOutage> curve;
    const std::size_t trials = 1000000000;
    for (int i = 0; i < 9; ++i)
    {
        const double g = std::pow(10.0, 1.0 + 0.25 * i);
        EmpiricalOutage e{};
        e.gamma = SnrPoint(g);
        e.trials = trials;
        e.p_hat = 1.0 / (g * g);
        e.count = static_cast<std::size_t>(e.p_hat * trials);
        curve.push_back(e);
    }
    const auto est = estimate_diversity(curve);
    ASSERT_EQ(est.size(), curve.size());
    for (const auto& d : est)
    {
        EXPECT_NEAR(d.d_prime_hat, 2.0, 1e-12);
        EXPECT_EQ(d.points, 5);
    }
}

TEST(EstimateDiversity, HalfWidthCoverage)
{
    const std::size_t trials = 1000000;
    const double c = 0.5;
    const double d = 1.3;
    int covered = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep)
    {
        std::mt19937_64 gen(1000 + rep);
        std::vector<EmpiricalOutage> curve;
        for (int i = 0; i < 11; ++i)
        {
            const double g = std::pow(10.0, 0.5 + 0.15 * i);
            const double p = c * std::pow(g, -d);
            std::binomial_distribution<std::size_t> bin(trials, p);
            curve.push_back(synthetic_point(g, trials, bin(gen)));
        }
        const auto est = estimate_diversity(curve);
        const auto& mid = est[5];
        covered += std::abs(mid.d_prime_hat - d) <= mid.half_width;
    }
    EXPECT_GE(covered, 95);
}

TEST(EstimateDiversity, InsufficientData)
{
    std::vector<EmpiricalOutage> curve{synthetic_point(10.0, 1000, 50), synthetic_point(20.0, 1000, 20),
                                       synthetic_point(30.0, 1000, 3), synthetic_point(40.0, 1000, 30)};
    EXPECT_FSDMT_ERROR(estimate_diversity(curve), ErrorKind::insufficient_data);
}

TEST(EstimateDiversity, Fig5TrendTowardOne)
{
    std::vector<SnrPoint> grid;
    for (double db = 10.0; db <= 25.0; db += 1.0)
        grid.push_back(SnrPoint::from_db(db));
    auto cfg = make_config(ChannelModel::iid(ChannelDims(2, 2)), grid, 200000, 55);
    cfg.target = MuxTarget{MeanCapacity{}, 1.0};
    const auto est = estimate_diversity(estimate_outage(cfg));
    ASSERT_EQ(est.size(), grid.size());
    EXPECT_LT(std::abs(est.back().d_prime_hat - 1.0), std::abs(est.front().d_prime_hat - 1.0));
    EXPECT_NEAR(est.back().d_prime_hat, 1.0, 0.15);
}
