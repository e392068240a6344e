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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <fsdmt/error.hpp>
#include <fsdmt/moments.hpp>
#include <fsdmt/montecarlo.hpp>

#include "oracles.hpp"

using namespace fsdmt;

namespace
{

constexpr double e = std::numbers::e;

CapacityMoments make_moments(double mean, double var)
{
    CapacityMoments cm{};
    cm.mean_nats = mean;
    cm.var_nats2 = var;
    return cm;
}

// Kronecker capacity samples through Cholesky factors (a different square root of R).
std::vector<double> kronecker_reference(const CorrelationMatrix& rt, const CorrelationMatrix& rr, double gamma,
                                        int trials, unsigned seed)
{
    const int m = rt.size();
    const int n = rr.size();
    const CMatrix lt = rt.entries().llt().matrixL();
    const CMatrix lr = rr.entries().llt().matrixL();
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    std::vector<double> out;
    CMatrix g(n, m);
    for (int t = 0; t < trials; ++t)
    {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                g(i, j) = {nd(gen), nd(gen)};
        out.push_back(testsupport::logdet_capacity(lr * g * lt.adjoint(), gamma / m));
    }
    return out;
}

} // namespace

TEST(FTulino, Examples)
{
    EXPECT_DOUBLE_EQ(f_tulino(0.0, 0.5), 0.0);
    EXPECT_DOUBLE_EQ(f_tulino(2.0, 1.0), 4.0);
    EXPECT_DOUBLE_EQ(f_tulino(6.0, 1.0), 16.0);
}

TEST(FTulino, UnitAspectIdentity)
{
    for (double lx = -3.0; lx <= 6.0; lx += 0.05)
    {
        const double x = std::pow(10.0, lx);
        const double s = std::sqrt(4.0 * x + 1.0) - 1.0;
        const double ref = s * s;
        EXPECT_NEAR(f_tulino(x, 1.0), ref, 2.0 * std::numeric_limits<double>::epsilon() * ref) << x;
    }
}

TEST(FTulino, SecondOrderExpansion)
{
    for (double g = 10.0; g <= 1e6; g *= 1.5)
    {
        const double lhs = f_tulino(g, 1.0) / (4.0 * g);
        const double rhs = 1.0 - 1.0 / std::sqrt(g) + 1.0 / (2.0 * g);
        EXPECT_LE(std::abs(lhs - rhs), 5.0 / std::pow(g, 1.5)) << g;
    }
}

TEST(IidMoments, VanishAtLowSnr)
{
    for (auto [m, n] : {std::pair{2, 2}, {4, 2}, {2, 8}, {10, 10}})
    {
        const auto cm = iid_moments(SnrPoint(1e-8), ChannelDims(m, n));
        EXPECT_NEAR(cm.mean_nats, 0.0, 1e-6);
        EXPECT_NEAR(cm.var_nats2, 0.0, 1e-6);
    }
}

TEST(IidMoments, SquareMatchesExpansionAt20dB)
{
    for (int n : {2, 10})
    {
        const auto cm = iid_moments(SnrPoint(100.0), ChannelDims(n, n));
        EXPECT_NEAR(cm.mean_nats / n, std::log(100.0 / e) + 0.2, 0.05);
        EXPECT_NEAR(cm.mean_nats / n, 3.805, 0.05);
    }
}

TEST(IidMoments, MatchMonteCarlo10x10)
{
    const auto cm = iid_moments(SnrPoint(10.0), ChannelDims(10, 10));
    const auto sm = testsupport::sample_moments(testsupport::iid_capacity_reference(10, 10, 10.0, 100000, 5));
    EXPECT_NEAR(cm.mean_nats / sm.mean, 1.0, 0.05);
    EXPECT_NEAR(cm.var_nats2 / sm.var, 1.0, 0.15);
}

TEST(IidMoments, ExtremeAspectIsFlagged)
{
    EXPECT_EQ(iid_moments(SnrPoint(10.0), ChannelDims(1, 30)).flags, moment_flags::extreme_aspect);
    EXPECT_EQ(iid_moments(SnrPoint(10.0), ChannelDims(30, 1)).flags, moment_flags::extreme_aspect);
    EXPECT_EQ(iid_moments(SnrPoint(10.0), ChannelDims(4, 2)).flags, moment_flags::none);
}

TEST(IidHighSnr, Offsets)
{
    EXPECT_DOUBLE_EQ(iid_power_offset(ChannelDims(4, 4)).value(), e);
    EXPECT_NEAR(iid_power_offset(ChannelDims(1, 2)).value(), e / 4.0, 1e-15);
    EXPECT_NEAR(iid_power_offset(ChannelDims(2, 1)).value(), e / 2.0, 1e-15);
}

TEST(IidHighSnr, Variances)
{
    const SnrPoint g(1000.0);
    EXPECT_NEAR(iid_moments_highsnr(g, ChannelDims(1, 2)).moments.var_nats2, std::log(2.0), 1e-15);
    EXPECT_NEAR(iid_moments_highsnr(g, ChannelDims(2, 1)).moments.var_nats2, std::log(2.0), 1e-15);
    EXPECT_NEAR(iid_moments_highsnr(g, ChannelDims(3, 3)).moments.var_nats2,
                0.5 * (std::log(250.0) + 2.0 / std::sqrt(1000.0)), 1e-14);
}

TEST(IidHighSnr, SquareMeanWithinFivePercentAt25dB)
{
    const auto d = ChannelDims(6, 6);
    const SnrPoint g(316.0);
    EXPECT_NEAR(iid_moments_highsnr(g, d).moments.mean_nats / iid_moments(g, d).mean_nats, 1.0, 0.05);
}

// The high-SNR mean drops the 2/sqrt(gamma) correction, so it needs about 22 dB to get
// within 5%; the variance keeps the correction and is within 2% from 10 dB.
TEST(IidHighSnr, SquareAccuracyAcrossSnr)
{
    for (int n : {1, 2, 4, 10, 32})
        for (double db = 10.0; db <= 60.0; db += 1.0)
        {
            const SnrPoint g = SnrPoint::from_db(db);
            const ChannelDims d(n, n);
            const auto hs = iid_moments_highsnr(g, d).moments;
            const auto full = iid_moments(g, d);
            EXPECT_LE(std::abs(hs.var_nats2 - full.var_nats2) / full.var_nats2, 0.02) << n << " " << db;
            if (db >= 22.0)
            {
                EXPECT_LE(std::abs(hs.mean_nats - full.mean_nats) / full.mean_nats, 0.05) << n << " " << db;
            }
        }
}

TEST(SquareExpansion, Examples)
{
    EXPECT_NEAR(square_expansion_moments(SnrPoint(e), 1).mean_nats, 2.0 / std::sqrt(e), 1e-15);
    EXPECT_NEAR(square_expansion_moments(SnrPoint(4.0), 3).var_nats2, 0.5, 1e-15);
}

TEST(SquareExpansion, AgreesWithTheoremAcrossGrid)
{
    for (double g = 100.0; g <= 1e6; g *= 2.0)
    {
        const auto a = square_expansion_moments(SnrPoint(g), 10);
        const auto b = iid_moments(SnrPoint(g), ChannelDims(10, 10));
        EXPECT_LT(std::abs(a.mean_nats - b.mean_nats) / 10.0, 0.05) << g;
    }
}

TEST(KroneckerMoments, IdentityCorrelations)
{
    const ChannelDims d(8, 3);
    const double g = 7.0;
    const auto km = kronecker_moments(SnrPoint(g), d, CorrelationMatrix::identity(8), CorrelationMatrix::identity(3));
    EXPECT_NEAR(km.moments.mean_nats, 3.0 * std::log1p(g), 1e-13);
    EXPECT_NEAR(km.moments.var_nats2, (3.0 / 8.0) * std::pow(g / (1.0 + g), 2), 1e-14);
    EXPECT_NEAR(km.offset.value(), 1.0, 1e-15);
}

TEST(KroneckerMoments, VanishAtLowSnr)
{
    const auto km = kronecker_moments(SnrPoint(1e-8), ChannelDims(16, 4), make_exponential_correlation(16, 0.9),
                                      make_exponential_correlation(4, 0.5));
    EXPECT_NEAR(km.moments.mean_nats, 0.0, 1e-6);
    EXPECT_NEAR(km.moments.var_nats2, 0.0, 1e-6);
}

TEST(KroneckerMoments, FlagsSingularReceiveAndShortArray)
{
    const CorrelationMatrix rr{2.0 * CMatrix::Ones(2, 2) / 2.0};
    const auto km = kronecker_moments(SnrPoint(10.0), ChannelDims(4, 2), CorrelationMatrix::identity(4), rr);
    EXPECT_TRUE(std::isinf(km.offset.value()));
    EXPECT_TRUE(km.moments.flags & moment_flags::singular_receive);
    EXPECT_TRUE(km.moments.flags & moment_flags::short_transmit_array);
    EXPECT_GT(km.moments.mean_nats, 0.0);

    const auto ok = kronecker_moments(SnrPoint(10.0), ChannelDims(8, 2), CorrelationMatrix::identity(8),
                                      CorrelationMatrix::identity(2));
    EXPECT_EQ(ok.moments.flags, moment_flags::none);
}

TEST(KroneckerMoments, OffsetFromDeterminant)
{
    const auto rr = make_exponential_correlation(3, 0.5);
    const auto km = kronecker_moments(SnrPoint(10.0), ChannelDims(12, 3), CorrelationMatrix::identity(12), rr);
    const double det = rr.entries().determinant().real();
    EXPECT_NEAR(km.offset.value(), std::pow(det, -1.0 / 3.0), 1e-12);
}

// Both moments are m -> infinity limits. With rho_t = 0.9 the transmit array has few
// effective degrees of freedom, so the Monte-Carlo gap is large at m = 16 and closes slowly.
TEST(KroneckerMoments, MonteCarloGapShrinksWithTransmitArray)
{
    const auto rr = make_exponential_correlation(4, 0.5);
    double prev_mean_gap = std::numeric_limits<double>::infinity();
    double prev_var_gap = std::numeric_limits<double>::infinity();
    double first_mean_gap = 0.0;
    double first_var_gap = 0.0;
    for (int m : {16, 32, 64})
    {
        const auto rt = make_exponential_correlation(m, 0.9);
        const auto km = kronecker_moments(SnrPoint(10.0), ChannelDims(m, 4), rt, rr);
        const auto sm = testsupport::sample_moments(kronecker_reference(rt, rr, 10.0, 20000, 11u + m));
        const double mean_gap = std::abs(sm.mean - km.moments.mean_nats) / km.moments.mean_nats;
        const double var_gap = std::abs(sm.var - km.moments.var_nats2) / km.moments.var_nats2;
        EXPECT_LT(mean_gap, prev_mean_gap) << m;
        EXPECT_LT(var_gap, prev_var_gap) << m;
        if (m == 16)
        {
            first_mean_gap = mean_gap;
            first_var_gap = var_gap;
        }
        prev_mean_gap = mean_gap;
        prev_var_gap = var_gap;
    }
    EXPECT_LT(prev_mean_gap, 0.5 * first_mean_gap);
    EXPECT_LT(prev_var_gap, 0.6 * first_var_gap);
}

TEST(KeyholeMoments, SingleIdentityMode)
{
    const ChannelDims d(4, 6);
    const double g = 9.0;
    const std::vector<KeyholeMode> modes{{1.0, CorrelationMatrix::identity(4), CorrelationMatrix::identity(6), 1.0, 1.0}};
    const auto km = keyhole_moments(SnrPoint(g), d, modes);
    EXPECT_NEAR(km.moments.mean_nats, std::log1p(g), 1e-15);
    EXPECT_NEAR(km.moments.var_nats2, std::pow(g / (1.0 + g), 2) * (1.0 / 4.0 + 1.0 / 6.0), 1e-15);
    EXPECT_NEAR(km.offset.value(), 1.0, 1e-15);
}

TEST(KeyholeMoments, LowSnrAndOffsetProduct)
{
    const ChannelDims d(4, 4);
    std::vector<KeyholeMode> modes{{1.0, CorrelationMatrix::identity(4), CorrelationMatrix::identity(4), 1.0, 1.0},
                                   {2.0, CorrelationMatrix::identity(4), CorrelationMatrix::identity(4), 1.0, 1.0}};
    const auto km = keyhole_moments(SnrPoint(1e-8), d, modes);
    EXPECT_NEAR(km.moments.mean_nats, 0.0, 1e-6);
    EXPECT_NEAR(km.moments.var_nats2, 0.0, 1e-6);
    EXPECT_NEAR(km.offset.value(), 0.5, 1e-15);
    EXPECT_THROW(keyhole_moments(SnrPoint(1.0), d, {}), Error);
}

TEST(ModelMoments, MeanIncreasesWithSnr)
{
    const std::vector<ChannelModel> models{
        ChannelModel::iid(ChannelDims(3, 5)),
        ChannelModel::kronecker(ChannelDims(16, 4), make_exponential_correlation(16, 0.6),
                                make_exponential_correlation(4, 0.3)),
        ChannelModel::single_keyhole(ChannelDims(4, 4), {0.0, 1.5}),
    };
    for (const auto& model : models)
    {
        double prev = -1.0;
        for (int i = 0; i < 60; ++i)
        {
            const double mean = model_moments(SnrPoint::from_db(i * 60.0 / 59.0), model).mean_nats;
            EXPECT_GT(mean, prev);
            prev = mean;
        }
    }
}

TEST(GaussianOutage, Examples)
{
    const auto cm = make_moments(2.0, 1.0);
    EXPECT_DOUBLE_EQ(gaussian_outage(cm, Rate(2.0)), 0.5);
    EXPECT_LT(gaussian_outage(cm, Rate(0.0)), 0.5);
    const double ref = 1.0 - testsupport::q_by_boost_erfc(1.2816);
    EXPECT_NEAR(gaussian_outage(cm, Rate(3.2816)), ref, 1e-14);
    EXPECT_NEAR(gaussian_outage(cm, Rate(3.2816)), 0.9, 1e-4);
    EXPECT_NEAR(gaussian_outage(cm, Rate(3.28)), 0.8997, 1e-4);
}

TEST(GaussianOutage, DegenerateStep)
{
    const auto cm = make_moments(2.0, 0.0);
    EXPECT_EQ(gaussian_outage(cm, Rate(1.0)), 0.0);
    EXPECT_EQ(gaussian_outage(cm, Rate(2.0)), 0.5);
    EXPECT_EQ(gaussian_outage(cm, Rate(3.0)), 1.0);
    EXPECT_EQ(gaussian_outage(make_moments(2.0, 1.0), Rate(std::numeric_limits<double>::infinity())), 1.0);
}

TEST(GaussianOutage, MonotoneInMeanAndRate)
{
    for (double mean = 0.5; mean <= 10.0; mean += 0.5)
        for (double rate = 0.0; rate <= 10.0; rate += 0.5)
        {
            const double p = gaussian_outage(make_moments(mean, 0.7), Rate(rate));
            EXPECT_LE(gaussian_outage(make_moments(mean + 0.5, 0.7), Rate(rate)), p);
            EXPECT_GE(gaussian_outage(make_moments(mean, 0.7), Rate(rate + 0.5)), p);
        }
}

TEST(GaussianOutage, LogDomainMatchesDeepTail)
{
    const auto cm = make_moments(100.0, 1.0);
    EXPECT_EQ(gaussian_outage(cm, Rate(0.0)), 0.0);
    EXPECT_NEAR(log_gaussian_outage(cm, Rate(0.0)), -5000.0 - std::log(100.0 * std::sqrt(2.0 * std::numbers::pi)), 1e-3);
}

TEST(Universality, TwoPointEntriesMatchTheorem)
{
    const auto model = ChannelModel::iid(ChannelDims(16, 16), EntryDistribution::two_point);
    SimConfig cfg{model, {SnrPoint(10.0)}};
    cfg.trials = 100000;
    cfg.seed = 17;
    const auto em = estimate_moments(cfg).front();
    const auto cm = iid_moments(SnrPoint(10.0), ChannelDims(16, 16));
    EXPECT_NEAR(em.moments.mean_nats / cm.mean_nats, 1.0, 0.05);
    EXPECT_NEAR(em.moments.var_nats2 / cm.var_nats2, 1.0, 0.15);
}
