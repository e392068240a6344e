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

#include "fsdmt/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "fsdmt/error.hpp"

namespace fsdmt
{

namespace
{

RVector checked_eigenvalues(const CMatrix& entries)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries, Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, ErrorKind::data, "eigendecomposition failed");
    RVector ev = solver.eigenvalues();
    const double top = ev.maxCoeff();
    require(top > 0.0, ErrorKind::not_psd, "correlation matrix has no positive eigenvalue");
    const double floor = -psd_tolerance * top;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
    {
        require(ev(i) >= floor, ErrorKind::not_psd, "correlation matrix is not positive semidefinite");
        ev(i) = std::max(ev(i), 0.0);
    }
    return ev;
}

} // namespace

CorrelationMatrix::CorrelationMatrix(const CMatrix& entries)
{
    require(entries.rows() >= 1 && entries.rows() == entries.cols(), ErrorKind::parameter,
            "correlation matrix must be square and non-empty");
    require(entries.allFinite(), ErrorKind::data, "correlation matrix has non-finite entries");

    const double scale = entries.cwiseAbs().maxCoeff();
    const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    require(asym <= hermitian_tolerance * scale, ErrorKind::parameter, "correlation matrix is not Hermitian");

    entries_ = 0.5 * (entries + entries.adjoint());
    eigenvalues_ = checked_eigenvalues(entries_);
}

CorrelationMatrix CorrelationMatrix::identity(int size)
{
    require(size >= 1, ErrorKind::parameter, "size must be positive");
    return CorrelationMatrix(CMatrix::Identity(size, size));
}

CorrelationMatrix CorrelationMatrix::scaled_to_trace(double target) const
{
    require(target > 0.0 && std::isfinite(target), ErrorKind::parameter, "target trace must be positive");
    return CorrelationMatrix(entries_ * (target / trace()));
}

CorrelationMatrix make_exponential_correlation(int size, double rho)
{
    require(size >= 1, ErrorKind::parameter, "size must be positive");
    require(rho >= 0.0 && rho < 1.0, ErrorKind::parameter, "rho must lie in [0, 1)");
    CMatrix r(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            r(i, j) = std::pow(rho, std::abs(i - j));
    return CorrelationMatrix(r);
}

CMatrix matrix_sqrt_psd(const CMatrix& r)
{
    require(r.rows() == r.cols(), ErrorKind::parameter, "matrix must be square");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(r);
    require(solver.info() == Eigen::Success, ErrorKind::data, "eigendecomposition failed");
    RVector ev = solver.eigenvalues();
    const double top = std::max(ev.maxCoeff(), 0.0);
    for (Eigen::Index i = 0; i < ev.size(); ++i)
    {
        require(ev(i) >= -psd_tolerance * top, ErrorKind::not_psd, "matrix is not positive semidefinite");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    const CMatrix& v = solver.eigenvectors();
    CMatrix s = v * ev.asDiagonal() * v.adjoint();
    return 0.5 * (s + s.adjoint());
}

CMatrix matrix_sqrt_psd(const CorrelationMatrix& r)
{
    return matrix_sqrt_psd(r.entries());
}

MatrixNorms norms(const CorrelationMatrix& r)
{
    const RVector& ev = r.eigenvalues();
    MatrixNorms out{};
    out.frobenius = ev.norm();
    out.spectral = ev.maxCoeff();
    out.ratio = out.spectral / out.frobenius;
    return out;
}

double correlation_measure(const CorrelationMatrix& r)
{
    return norms(r).frobenius / r.size();
}

NormMoments vector_norm_moments(const CorrelationMatrix& r, double m2_g)
{
    require(m2_g >= 0.0, ErrorKind::parameter, "m2_g must be nonnegative");
    const double f = r.eigenvalues().norm();
    return {r.trace(), f * f * m2_g};
}

} // namespace fsdmt
