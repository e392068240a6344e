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

#ifndef FSDMT_MONTECARLO_HPP
#define FSDMT_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "fsdmt/channel.hpp"
#include "fsdmt/dmt.hpp"
#include "fsdmt/rng.hpp"
#include "fsdmt/types.hpp"

namespace fsdmt
{

/// Multiplexing gain r under a given definition; the rate at each SNR is derived
/// from the model's analytic moments.
struct MuxTarget
{
    MuxGainDef def;
    double r;
};

struct SimConfig
{
    ChannelModel model;
    std::vector<SnrPoint> snr_grid;
    std::variant<MuxTarget, Rate> target{Rate(0.0)};
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1; // advisory; results do not depend on it

    /// Throws ErrorKind::configuration for an empty or non-increasing grid or zero
    /// trials, and ErrorKind::parameter for r outside [0, m*].
    void validate() const;
};

/// Outage counts below this are reported but not used for slope estimates.
inline constexpr double reliability_count = 10.0;

struct EmpiricalOutage
{
    SnrPoint gamma{1.0};
    Rate rate{0.0};
    double p_hat = 0.0;
    std::size_t trials = 0;
    std::size_t count = 0;
    double std_error = 0.0; // sqrt(p_hat (1 - p_hat) / trials)
    bool skipped = false;   // the rate was undefined at this SNR

    bool reliable() const noexcept;
};

struct EmpiricalMoments
{
    CapacityMoments moments; // sample mean and unbiased sample variance
    double mean_std_error = 0.0;
    double var_std_error = 0.0;
    std::size_t trials = 0;
};

struct DiversityEstimate
{
    SnrPoint gamma{1.0};
    double d_prime_hat = 0.0;
    double half_width = 0.0;
    int points = 0; // points used in the local fit
};

struct DiversityOptions
{
    int window = 5;
    int min_points = 3;
    double z = 2.576; // two-sided 99% normal quantile
};

/// One channel draw from `stream`. Returns an n x m matrix.
CMatrix sample_channel(const ChannelModel& model, CounterStream& stream);

/// Per-element SNR scale s in ln det(I + s H H^+): gamma / m, or gamma / (m n) for keyhole models.
double capacity_scale(ChannelDims dims, ModelKind kind, SnrPoint gamma);

/// Eigenvalues of the smaller Gram matrix of H, clipped at zero.
RVector gram_eigenvalues(const CMatrix& h);

/// sum ln(1 + s lambda)
double capacity_from_eigenvalues(const RVector& eigenvalues, double s);

/// ln det(I + s H H^+) in nats. Throws ErrorKind::data for non-finite entries.
Rate capacity(const CMatrix& h, SnrPoint gamma, ModelKind kind);

/// Outage estimate per grid point; rate regime failures mark the point skipped.
std::vector<EmpiricalOutage> estimate_outage(const SimConfig& config);

/// Sample capacity moments per grid point. Throws ErrorKind::configuration for fewer than 2 trials.
std::vector<EmpiricalMoments> estimate_moments(const SimConfig& config);

/// Raw capacity samples at one SNR, trial t at index t.
std::vector<double> capacity_samples(const ChannelModel& model, SnrPoint gamma, std::size_t trials,
                                     std::uint64_t seed, unsigned workers = 1);

/// Local weighted least-squares slope of -ln p_hat against ln gamma over a sliding
/// window of reliable points. Throws ErrorKind::insufficient_data without three
/// consecutive reliable points.
std::vector<DiversityEstimate> estimate_diversity(const std::vector<EmpiricalOutage>& curve,
                                                  const DiversityOptions& options = {});

} // namespace fsdmt

#endif
