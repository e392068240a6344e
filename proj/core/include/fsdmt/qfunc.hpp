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

#ifndef FSDMT_QFUNC_HPP
#define FSDMT_QFUNC_HPP

namespace fsdmt
{

/// Standard normal tail Q(z) = P[N(0,1) > z], through erfc.
double q_function(double z);

/// ln Q(z), accurate deep into the tail where Q(z) underflows.
double log_q(double z);

/// Chernoff bound 0.5 exp(-z^2 / 2), valid for z >= 0.
double q_upper_bound(double z);

/// Leading tail term exp(-z^2 / 2) / (sqrt(2 pi) z). Throws ErrorKind::domain for z <= 0.
double q_tail_approx(double z);

} // namespace fsdmt

#endif
