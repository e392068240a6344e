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

#include "fsdmt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "fsdmt/error.hpp"

namespace fsdmt
{

namespace
{

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

struct Integral
{
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;

    void add(const Integral& o)
    {
        value += o.value;
        error += o.error;
        l1 += o.l1;
    }
};

template <class F>
Integral integrate(F&& f, double a, double b, const QuadratureSpec& spec)
{
    Integral out;
    if (!(b > a))
        return out;
    // Boost reports the error estimate in the units of the reference interval [-1, 1]
    // without rescaling; mapping onto it here keeps the top-level estimate exact and
    // deeper levels conservative.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const auto g = [&](double t) { return half * f(mid + half * t); };
    out.value = Kronrod::integrate(g, -1.0, 1.0, spec.max_depth, spec.tolerance, &out.error, &out.l1);
    return out;
}

// Integrate over [a, b] split at the given interior points.
template <class F>
Integral integrate_pieces(F&& f, double a, double b, std::vector<double> cuts, const QuadratureSpec& spec)
{
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    Integral total;
    double lo = a;
    for (double c : cuts)
    {
        if (c <= lo || c > b)
            continue;
        total.add(integrate(f, lo, c, spec));
        lo = c;
    }
    return total;
}

void check_precision(const Integral& r, const QuadratureSpec& spec, const char* what)
{
    const double scale = std::max(r.l1, std::abs(r.value));
    if (r.error > spec.tolerance * scale && r.error > 0.0)
    {
        std::ostringstream msg;
        msg << what << ": quadrature reached relative error " << r.error / scale << ", requested " << spec.tolerance;
        throw Error(ErrorKind::precision, msg.str());
    }
}

// Integral of (l1 - l2)^2 e^{-l1 - l2} over l1 in [0, x_max], l2 in [0, inner(l1)].
template <class Inner>
Integral wishart_region(double x_max, Inner&& inner, std::vector<double> cuts, const QuadratureSpec& spec)
{
    Integral worst;
    auto outer = [&](double l1) {
        const double u = inner(l1);
        const Integral in = integrate([l1](double l2) { return (l1 - l2) * (l1 - l2) * std::exp(-l1 - l2); }, 0.0, u,
                                      spec);
        worst.error = std::max(worst.error, in.l1 > 0.0 ? in.error / in.l1 : 0.0);
        return in.value;
    };
    Integral r = integrate_pieces(outer, 0.0, x_max, std::move(cuts), spec);
    if (worst.error > spec.tolerance)
        r.error = std::max(r.error, worst.error * r.l1);
    return r;
}

} // namespace

void QuadratureSpec::validate() const
{
    require(tolerance > 0.0 && tolerance <= 1e-2, ErrorKind::parameter, "quadrature tolerance must lie in (0, 1e-2]");
    require(max_depth >= 1, ErrorKind::parameter, "quadrature depth must be positive");
}

double QuadratureSpec::truncation() const
{
    return 50.0 + 10.0 * std::log(1.0 / tolerance);
}

double siso_rayleigh_outage(SnrPoint gamma, Rate rate)
{
    if (std::isinf(rate.nats()))
        return 1.0;
    return -std::expm1(-std::expm1(rate.nats()) / gamma.linear());
}

double vector_rayleigh_outage(SnrPoint gamma, Rate rate, ChannelDims dims)
{
    require(dims.min_dim() == 1, ErrorKind::parameter, "vector oracle needs min(m, n) = 1");
    if (std::isinf(rate.nats()))
        return 1.0;
    if (rate.nats() == 0.0)
        return 0.0;
    if (dims.max_dim() == 1)
        return siso_rayleigh_outage(gamma, rate);
    return boost::math::gamma_p(static_cast<double>(dims.max_dim()), dims.m() * std::expm1(rate.nats()) / gamma.linear());
}

double wishart2x2_density_mass(const QuadratureSpec& spec)
{
    spec.validate();
    const double l = spec.truncation();
    const Integral r = wishart_region(l, [l](double) { return l; }, {2.0, 10.0}, spec);
    check_precision(r, spec, "wishart normalization");
    return r.value;
}

double wishart2x2_outage(SnrPoint gamma, Rate rate, const QuadratureSpec& spec)
{
    spec.validate();
    if (std::isinf(rate.nats()))
        return 1.0;
    if (rate.nats() == 0.0)
        return 0.0;

    const double l = spec.truncation();
    const double s = gamma.linear() / 2.0;
    const double er = std::exp(rate.nats());
    const double em1 = std::expm1(rate.nats());
    const double x_max = std::min(l, em1 / s);
    const auto inner = [&](double l1) { return std::clamp((er / (1.0 + s * l1) - 1.0) / s, 0.0, l); };

    std::vector<double> cuts;
    const double kink = (er / (1.0 + s * l) - 1.0) / s; // inner limit reaches the cut-off
    if (kink > 0.0 && kink < x_max)
        cuts.push_back(kink);
    for (double c : {2.0, 10.0})
        if (c < x_max)
            cuts.push_back(c);

    const Integral r = wishart_region(x_max, inner, cuts, spec);
    check_precision(r, spec, "wishart outage");
    const double mass = wishart2x2_density_mass(spec);
    return std::clamp(r.value / mass, 0.0, 1.0);
}

double single_keyhole_outage(SnrPoint gamma, Rate rate, ChannelDims dims, double b_gain, const QuadratureSpec& spec)
{
    spec.validate();
    require(b_gain > 0.0, ErrorKind::parameter, "modal gain must be positive");
    if (std::isinf(rate.nats()))
        return 1.0;
    if (rate.nats() == 0.0)
        return 0.0;

    const double m = dims.m();
    const double n = dims.n();
    const double c = m * n * std::expm1(rate.nats()) / (gamma.linear() * b_gain);
    const boost::math::gamma_distribution<double> x_law(m, 1.0);
    const double upper = std::max(spec.truncation(), m + 40.0 * std::sqrt(m));

    const auto f = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        return boost::math::pdf(x_law, t) * boost::math::gamma_p(n, c / t);
    };
    std::vector<double> cuts{m};
    if (c < upper)
        cuts.push_back(c);
    const Integral r = integrate_pieces(f, 0.0, upper, cuts, spec);
    check_precision(r, spec, "keyhole outage");
    return std::clamp(r.value, 0.0, 1.0);
}

} // namespace fsdmt
