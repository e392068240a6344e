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

#include "fsdmt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "fsdmt/error.hpp"
#include "fsdmt/moments.hpp"

namespace fsdmt
{

namespace
{

// Trials are grouped into fixed blocks so that per-block statistics and their
// in-order merge do not depend on how many workers ran them.
constexpr std::size_t block_size = 4096;

CVector gaussian_vector(Eigen::Index size, CounterStream& stream, std::normal_distribution<double>& normal)
{
    CVector v(size);
    for (Eigen::Index i = 0; i < size; ++i)
    {
        const double re = normal(stream);
        const double im = normal(stream);
        v(i) = {re, im};
    }
    return v;
}

CMatrix gaussian_matrix(int rows, int cols, CounterStream& stream, std::normal_distribution<double>& normal)
{
    CMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
        {
            const double re = normal(stream);
            const double im = normal(stream);
            g(i, j) = {re, im};
        }
    return g;
}

CMatrix two_point_matrix(int rows, int cols, CounterStream& stream)
{
    CMatrix g = CMatrix::Zero(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
        {
            const bool on = stream.uniform() < 0.5;
            const double theta = 2.0 * std::numbers::pi * stream.uniform();
            if (on)
                g(i, j) = std::polar(std::numbers::sqrt2, theta);
        }
    return g;
}

// Running mean / M2 / M3 / M4 for one block, merged pairwise in block order.
struct Accumulator
{
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;

    void push(double x)
    {
        const double n1 = count;
        count += 1.0;
        const double delta = x - mean;
        const double dn = delta / count;
        const double dn2 = dn * dn;
        const double term = delta * dn * n1;
        mean += dn;
        m4 += term * dn2 * (count * count - 3.0 * count + 3.0) + 6.0 * dn2 * m2 - 4.0 * dn * m3;
        m3 += term * dn * (count - 2.0) - 3.0 * dn * m2;
        m2 += term;
    }

    void merge(const Accumulator& o)
    {
        if (o.count == 0.0)
            return;
        if (count == 0.0)
        {
            *this = o;
            return;
        }
        const double na = count;
        const double nb = o.count;
        const double n = na + nb;
        const double d = o.mean - mean;
        const double d2 = d * d;
        const double new_m4 = m4 + o.m4 + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                              6.0 * d2 * (na * na * o.m2 + nb * nb * m2) / (n * n) + 4.0 * d * (na * o.m3 - nb * m3) / n;
        const double new_m3 = m3 + o.m3 + d2 * d * na * nb * (na - nb) / (n * n) + 3.0 * d * (na * o.m2 - nb * m2) / n;
        m2 += o.m2 + d2 * na * nb / n;
        mean += d * nb / n;
        m3 = new_m3;
        m4 = new_m4;
        count = n;
    }
};

struct BlockResult
{
    std::vector<std::size_t> counts;    // per grid point
    std::vector<Accumulator> moments;   // per grid point
};

// Runs `body(trial, eigenvalues)` for every trial, distributing fixed-size blocks over
// workers. Each block writes only its own slot of `out`.
template <class Body>
void for_each_block(std::size_t trials, unsigned workers, std::size_t blocks, Body&& body)
{
    const unsigned used = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(blocks, 1)));
    if (used == 1)
    {
        for (std::size_t b = 0; b < blocks; ++b)
            body(b, b * block_size, std::min(trials, (b + 1) * block_size));
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t b = w; b < blocks; b += used)
                body(b, b * block_size, std::min(trials, (b + 1) * block_size));
        });
}

std::vector<double> grid_scales(const SimConfig& config)
{
    std::vector<double> s;
    s.reserve(config.snr_grid.size());
    for (const auto& g : config.snr_grid)
        s.push_back(capacity_scale(config.model.dims(), config.model.kind(), g));
    return s;
}

std::vector<BlockResult> run_blocks(const SimConfig& config, const std::vector<double>& rates, bool with_moments)
{
    const std::size_t points = config.snr_grid.size();
    const std::size_t blocks = (config.trials + block_size - 1) / block_size;
    const std::vector<double> scales = grid_scales(config);
    std::vector<BlockResult> results(blocks);

    for_each_block(config.trials, config.workers, blocks, [&](std::size_t b, std::size_t begin, std::size_t end) {
        BlockResult& res = results[b];
        res.counts.assign(points, 0);
        if (with_moments)
            res.moments.assign(points, Accumulator{});
        for (std::size_t t = begin; t < end; ++t)
        {
            CounterStream stream(config.seed, t);
            const RVector ev = gram_eigenvalues(sample_channel(config.model, stream));
            for (std::size_t k = 0; k < points; ++k)
            {
                const double c = capacity_from_eigenvalues(ev, scales[k]);
                if (c < rates[k])
                    ++res.counts[k];
                if (with_moments)
                    res.moments[k].push(c);
            }
        }
    });
    return results;
}

std::optional<double> target_rate(const SimConfig& config, SnrPoint gamma)
{
    if (const auto* rate = std::get_if<Rate>(&config.target))
        return rate->nats();
    const auto& mux = std::get<MuxTarget>(config.target);
    try
    {
        const CapacityMoments cm = model_moments(gamma, config.model);
        return rate_from_mux(mux.r, mux.def, gamma, cm, config.model.rank()).nats();
    }
    catch (const Error& e)
    {
        if (e.kind() != ErrorKind::regime)
            throw;
        return std::nullopt;
    }
}

} // namespace

void SimConfig::validate() const
{
    require(trials >= 1, ErrorKind::configuration, "trial count must be positive");
    require(!snr_grid.empty(), ErrorKind::configuration, "SNR grid is empty");
    for (std::size_t i = 1; i < snr_grid.size(); ++i)
        require(snr_grid[i - 1] < snr_grid[i], ErrorKind::configuration, "SNR grid must be strictly increasing");
    if (const auto* mux = std::get_if<MuxTarget>(&target))
        require(mux->r >= 0.0 && mux->r <= model.rank().value(), ErrorKind::parameter,
                "multiplexing gain out of range");
}

bool EmpiricalOutage::reliable() const noexcept
{
    return !skipped && p_hat * static_cast<double>(trials) >= reliability_count * (1.0 - 1e-12);
}

CMatrix sample_channel(const ChannelModel& model, CounterStream& stream)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const ChannelDims& d = model.dims();
    switch (model.kind())
    {
    case ModelKind::iid:
    {
        if (model.as<IidUnitVariance>().dist == EntryDistribution::two_point)
            return two_point_matrix(d.n(), d.m(), stream);
        return gaussian_matrix(d.n(), d.m(), stream, normal);
    }
    case ModelKind::kronecker:
    {
        const auto& k = model.as<KroneckerRayleigh>();
        return k.rr_sqrt * gaussian_matrix(d.n(), d.m(), stream, normal) * k.rt_sqrt;
    }
    case ModelKind::keyhole:
    {
        const auto& k = model.as<MultiKeyhole>();
        CMatrix h = CMatrix::Zero(d.n(), d.m());
        for (std::size_t i = 0; i < k.modes.size(); ++i)
        {
            const CVector gr = gaussian_vector(d.n(), stream, normal);
            const CVector gt = gaussian_vector(d.m(), stream, normal);
            h.noalias() += k.modes[i].b * (k.rr_sqrt[i] * gr) * (k.rt_sqrt[i] * gt).adjoint();
        }
        return h;
    }
    }
    throw Error(ErrorKind::parameter, "unknown channel model");
}

double capacity_scale(ChannelDims dims, ModelKind kind, SnrPoint gamma)
{
    if (kind == ModelKind::keyhole)
        return gamma.linear() / (static_cast<double>(dims.m()) * dims.n());
    return gamma.linear() / dims.m();
}

RVector gram_eigenvalues(const CMatrix& h)
{
    require(h.allFinite(), ErrorKind::data, "channel matrix has non-finite entries");
    const CMatrix gram = h.rows() <= h.cols() ? CMatrix(h * h.adjoint()) : CMatrix(h.adjoint() * h);
    if (gram.rows() == 1)
        return RVector::Constant(1, std::max(gram(0, 0).real(), 0.0));
    if (gram.rows() == 2)
    {
        const double a = gram(0, 0).real();
        const double d = gram(1, 1).real();
        const double half = 0.5 * (a - d);
        const double root = std::sqrt(half * half + std::norm(gram(0, 1)));
        const double mid = 0.5 * (a + d);
        RVector ev(2);
        ev << std::max(mid - root, 0.0), mid + root;
        return ev;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseMax(0.0);
}

double capacity_from_eigenvalues(const RVector& eigenvalues, double s)
{
    double c = 0.0;
    for (double lam : eigenvalues)
        c += std::log1p(s * lam);
    return c;
}

Rate capacity(const CMatrix& h, SnrPoint gamma, ModelKind kind)
{
    const ChannelDims dims(static_cast<int>(h.cols()), static_cast<int>(h.rows()));
    return Rate(capacity_from_eigenvalues(gram_eigenvalues(h), capacity_scale(dims, kind, gamma)));
}

std::vector<EmpiricalOutage> estimate_outage(const SimConfig& config)
{
    config.validate();
    const std::size_t points = config.snr_grid.size();
    std::vector<double> rates(points);
    std::vector<bool> skipped(points, false);
    for (std::size_t k = 0; k < points; ++k)
    {
        const auto r = target_rate(config, config.snr_grid[k]);
        skipped[k] = !r.has_value();
        rates[k] = r.value_or(0.0);
    }

    const auto blocks = run_blocks(config, rates, false);
    std::vector<EmpiricalOutage> out;
    out.reserve(points);
    const double n = static_cast<double>(config.trials);
    for (std::size_t k = 0; k < points; ++k)
    {
        EmpiricalOutage e{};
        e.gamma = config.snr_grid[k];
        e.trials = config.trials;
        e.skipped = skipped[k];
        if (e.skipped)
        {
            e.p_hat = std::numeric_limits<double>::quiet_NaN();
            e.std_error = std::numeric_limits<double>::quiet_NaN();
        }
        else
        {
            e.rate = Rate(rates[k]);
            for (const auto& b : blocks)
                e.count += b.counts[k];
            e.p_hat = static_cast<double>(e.count) / n;
            e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / n);
        }
        out.push_back(e);
    }
    return out;
}

std::vector<EmpiricalMoments> estimate_moments(const SimConfig& config)
{
    config.validate();
    require(config.trials >= 2, ErrorKind::configuration, "moment estimates need at least two trials");
    const std::size_t points = config.snr_grid.size();
    const auto blocks = run_blocks(config, std::vector<double>(points, 0.0), true);

    std::vector<EmpiricalMoments> out;
    out.reserve(points);
    for (std::size_t k = 0; k < points; ++k)
    {
        Accumulator acc;
        for (const auto& b : blocks)
            acc.merge(b.moments[k]);
        const double n = acc.count;
        const double var = acc.m2 / (n - 1.0);
        const double m4 = acc.m4 / n;
        const double mu2 = acc.m2 / n;

        EmpiricalMoments e{};
        e.trials = config.trials;
        e.moments.gamma = config.snr_grid[k];
        e.moments.mean_nats = acc.mean;
        e.moments.var_nats2 = var;
        e.mean_std_error = std::sqrt(var / n);
        e.var_std_error = std::sqrt(std::max(m4 - mu2 * mu2, 0.0) / n);
        out.push_back(e);
    }
    return out;
}

std::vector<double> capacity_samples(const ChannelModel& model, SnrPoint gamma, std::size_t trials, std::uint64_t seed,
                                     unsigned workers)
{
    require(trials >= 1, ErrorKind::configuration, "trial count must be positive");
    std::vector<double> out(trials);
    const double s = capacity_scale(model.dims(), model.kind(), gamma);
    const std::size_t blocks = (trials + block_size - 1) / block_size;
    for_each_block(trials, workers, blocks, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
        {
            CounterStream stream(seed, t);
            out[t] = capacity_from_eigenvalues(gram_eigenvalues(sample_channel(model, stream)), s);
        }
    });
    return out;
}

std::vector<DiversityEstimate> estimate_diversity(const std::vector<EmpiricalOutage>& curve, const DiversityOptions& options)
{
    require(options.min_points >= 2 && options.window >= options.min_points, ErrorKind::parameter,
            "window must hold at least min_points >= 2 points");

    // Maximal runs of consecutive reliable points.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < curve.size();)
    {
        if (!curve[i].reliable())
        {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < curve.size() && curve[j].reliable())
            ++j;
        if (j - i >= static_cast<std::size_t>(options.min_points))
            runs.emplace_back(i, j);
        i = j;
    }
    require(!runs.empty(), ErrorKind::insufficient_data, "fewer than three consecutive reliable outage points");

    const auto weight = [](const EmpiricalOutage& e) {
        const double n = static_cast<double>(e.trials);
        return 1.0 / std::max((1.0 - e.p_hat) / (n * e.p_hat), 1.0 / (n * n));
    };

    std::vector<DiversityEstimate> out;
    for (const auto& [begin, end] : runs)
    {
        const std::size_t width = std::min(end - begin, static_cast<std::size_t>(options.window));
        for (std::size_t i = begin; i < end; ++i)
        {
            const std::size_t centered = i >= begin + width / 2 ? i - width / 2 : begin;
            const std::size_t lo = std::min(centered, end - width);
            const std::size_t hi = lo + width;

            double sw = 0.0, sx = 0.0, sy = 0.0;
            for (std::size_t k = lo; k < hi; ++k)
            {
                const double w = weight(curve[k]);
                sw += w;
                sx += w * curve[k].gamma.ln();
                sy += w * -std::log(curve[k].p_hat);
            }
            const double xb = sx / sw;
            const double yb = sy / sw;
            double sxx = 0.0, sxy = 0.0;
            for (std::size_t k = lo; k < hi; ++k)
            {
                const double w = weight(curve[k]);
                const double dx = curve[k].gamma.ln() - xb;
                sxx += w * dx * dx;
                sxy += w * dx * (-std::log(curve[k].p_hat) - yb);
            }
            DiversityEstimate d{};
            d.gamma = curve[i].gamma;
            d.d_prime_hat = sxy / sxx;
            d.half_width = options.z / std::sqrt(sxx);
            d.points = static_cast<int>(width);
            out.push_back(d);
        }
    }
    return out;
}

} // namespace fsdmt
