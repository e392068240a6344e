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

#ifndef FSDMT_TESTS_EXPECT_ERROR_HPP
#define FSDMT_TESTS_EXPECT_ERROR_HPP

#include <gtest/gtest.h>

#include <fsdmt/error.hpp>

// Asserts that `stmt` throws fsdmt::Error of the given kind.
#define EXPECT_FSDMT_ERROR(stmt, expected_kind)                                                                       \
    do                                                                                                                \
    {                                                                                                                 \
        try                                                                                                           \
        {                                                                                                             \
            stmt;                                                                                                     \
            ADD_FAILURE() << "expected fsdmt::Error from " #stmt;                                                     \
        }                                                                                                             \
        catch (const fsdmt::Error& err_)                                                                              \
        {                                                                                                             \
            EXPECT_EQ(err_.kind(), expected_kind) << err_.what();                                                     \
        }                                                                                                             \
    } while (false)

#endif
