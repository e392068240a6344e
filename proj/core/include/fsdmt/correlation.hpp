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

#ifndef FSDMT_CORRELATION_HPP
#define FSDMT_CORRELATION_HPP

#include <complex>

#include <Eigen/Dense>

namespace fsdmt
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double hermitian_tolerance = 1e-12; // relative to max |entry|
inline constexpr double psd_tolerance = 1e-10;       // relative to the largest eigenvalue

/// Hermitian positive semidefinite correlation matrix with cached eigenvalues.
///
/// Construction checks the Hermitian and PSD invariants and throws
/// ErrorKind::not_psd or ErrorKind::parameter when they do not hold. The stored
/// entries are the Hermitian part of the input.
class CorrelationMatrix
{
public:
    explicit CorrelationMatrix(const CMatrix& entries);

    static CorrelationMatrix identity(int size);

    const CMatrix& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.rows()); }

    /// Eigenvalues in ascending order, with values inside the PSD tolerance clipped to zero.
    const RVector& eigenvalues() const noexcept { return eigenvalues_; }

    double trace() const noexcept { return eigenvalues_.sum(); }

    /// Copy rescaled so that tr R = target.
    CorrelationMatrix scaled_to_trace(double target) const;

private:
    CMatrix entries_;
    RVector eigenvalues_;
};

/// Entry (i, j) = rho^|i - j|.
CorrelationMatrix make_exponential_correlation(int size, double rho);

/// Hermitian PSD square root S with S S = R, computed by eigendecomposition.
CMatrix matrix_sqrt_psd(const CMatrix& r);
CMatrix matrix_sqrt_psd(const CorrelationMatrix& r);

struct MatrixNorms
{
    double frobenius;
    double spectral;
    double ratio; // spectral / frobenius, in (0, 1]
};

MatrixNorms norms(const CorrelationMatrix& r);

/// (1/size) * ||R||_F for a trace-normalized R; 1/sqrt(size) for identity, 1 for rank one.
double correlation_measure(const CorrelationMatrix& r);

struct NormMoments
{
    double mean;
    double variance;
};

/// Mean and variance of ||R^{1/2} g||^2 for g with i.i.d. unit-variance entries whose
/// |g|^2 has central second moment m2_g (1 for complex Gaussian).
NormMoments vector_norm_moments(const CorrelationMatrix& r, double m2_g);

} // namespace fsdmt

#endif
