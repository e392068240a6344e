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

#include <gtest/gtest.h>

#include <fsdmt/error.hpp>
#include <fsdmt/qfunc.hpp>

#include "oracles.hpp"

using namespace fsdmt;

TEST(QFunction, Origin)
{
    EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
    EXPECT_DOUBLE_EQ(q_upper_bound(0.0), 0.5);
}

TEST(QFunction, ThreeAgainstIntegration)
{
    const double ref = testsupport::q_by_integration(3.0);
    EXPECT_NEAR(ref, 1.3499e-3, 1e-7);
    EXPECT_NEAR(q_function(3.0) / ref, 1.0, 1e-10);
}

TEST(QFunction, ChernoffBound)
{
    for (double z : {0.0, 0.5, 1.0, 2.0, 4.0})
        EXPECT_LE(q_function(z), q_upper_bound(z)) << z;
}

TEST(QFunction, RelativeAccuracyDownTo1e300)
{
    for (double z = -8.0; z <= 37.0; z += 0.25)
    {
        const double ref = testsupport::q_by_boost_erfc(z);
        EXPECT_NEAR(q_function(z) / ref, 1.0, 1e-12) << z;
        EXPECT_NEAR(log_q(z) - std::log(ref), 0.0, 1e-12 * std::max(1.0, std::abs(std::log(ref)))) << z;
    }
}

TEST(QFunction, LogTailIsFiniteBeyondUnderflow)
{
    EXPECT_TRUE(std::isfinite(log_q(60.0)));
    EXPECT_LT(log_q(60.0), log_q(50.0));
    EXPECT_NEAR(log_q(60.0), -0.5 * 3600.0 - std::log(60.0 * std::sqrt(2.0 * std::numbers::pi)), 1e-3);
    EXPECT_NEAR(log_q(-60.0), 0.0, 1e-300);
}

TEST(QFunction, TailApproximation)
{
    EXPECT_THROW(q_tail_approx(0.0), Error);
    try
    {
        q_tail_approx(-1.0);
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::domain);
    }
    for (double z : {1.0, 2.0, 5.0, 10.0})
        EXPECT_GE(q_tail_approx(z), q_function(z));
    EXPECT_NEAR(q_tail_approx(20.0) / q_function(20.0), 1.0, 3e-3);
}

TEST(QFunction, Monotone)
{
    double prev = 1.0;
    for (double z = -10.0; z <= 40.0; z += 0.1)
    {
        const double q = q_function(z);
        EXPECT_LE(q, prev);
        prev = q;
    }
}
