// SPDX-License-Identifier: Apache-2.0
//
// ncrs - rate regions for the two-user MISO broadcast channel with magnitude CSIT
// Copyright (C) 2026 The ncrs authors
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

// Reference computations for tests. Everything here is written from the
// rate formulas directly and shares no code with the library's solvers.

#ifndef NCRS_TESTS_ORACLES_HPP
#define NCRS_TESTS_ORACLES_HPP

#include "ncrs/channel.hpp"
#include "ncrs/region.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline double sym_sum_rate(double snr, double inr, double lambda)
{
    const double t = snr + inr;
    return std::log2(1.0 + (1.0 - lambda) * t / (1.0 + lambda * t)) +
           2.0 * std::log2(1.0 + lambda * snr / (1.0 + lambda * inr));
}

/// Argmax of the symmetric sum rate on the grid k*step, k = 0..1/step.
inline double sym_grid_argmax(double snr, double inr, double step)
{
    const int n = static_cast<int>(std::lround(1.0 / step));
    double best_x = 0.0, best_v = -1.0;
    for (int k = 0; k <= n; ++k) {
        const double x = static_cast<double>(k) / n;
        const double v = sym_sum_rate(snr, inr, x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    return best_x;
}

/// Richardson-extrapolated five-point central difference. Near a small
/// lambda* the sum rate varies on a scale of 1/(snr+inr), so plain central
/// differences at h = 1e-6 carry truncation errors far above 1e-4.
inline double sym_derivative(double snr, double inr, double lambda, double h = 1e-6)
{
    auto f = [&](double x) { return sym_sum_rate(snr, inr, x); };
    auto d5 = [&](double k) {
        return (f(lambda - 2 * k) - 8 * f(lambda - k) + 8 * f(lambda + k) - f(lambda + 2 * k)) / (12.0 * k);
    };
    return (16.0 * d5(h / 2) - d5(h)) / 15.0;
}

struct Rates {
    double r1, r2;
};

/// NCRS user rates straight from the private / common rate expressions.
inline Rates ncrs_direct(double g11, double g12, double g21, double g22, double l1, double l2, double alpha)
{
    const double r1p = std::log2(1.0 + l1 * g11 / (1.0 + l2 * g12));
    const double r2p = std::log2(1.0 + l2 * g22 / (1.0 + l1 * g21));
    const double c1 = std::log2(1.0 + ((1 - l1) * g11 + (1 - l2) * g12) / (1.0 + l1 * g11 + l2 * g12));
    const double c2 = std::log2(1.0 + ((1 - l1) * g21 + (1 - l2) * g22) / (1.0 + l1 * g21 + l2 * g22));
    const double rc = std::min(c1, c2);
    return {r1p + alpha * rc, r2p + (1.0 - alpha) * rc};
}

/// All alpha-endpoint NCRS points on an n x n lambda grid.
inline std::vector<ncrs::RatePoint> ncrs_grid_points(const ncrs::LinkGains& g, int n)
{
    std::vector<ncrs::RatePoint> pts;
    pts.reserve(2 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (double a : {0.0, 1.0}) {
                const Rates r = ncrs_direct(g.g11(), g.g12(), g.g21(), g.g22(), double(i) / (n - 1),
                                            double(j) / (n - 1), a);
                pts.push_back({r.r1, r.r2});
            }
    return pts;
}

/// Channel with gains log-uniform in [lo_db, hi_db] (at P = 2, so
/// gamma_ij = |h_ij|^2) and uniform phases.
inline ncrs::ComplexChannel random_channel(std::mt19937_64& rng, double lo_db = -10.0, double hi_db = 20.0)
{
    std::uniform_real_distribution<double> db(lo_db, hi_db);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    auto tap = [&] { return ncrs::Tap{std::sqrt(std::pow(10.0, db(rng) / 10.0)), ph(rng)}; };
    const ncrs::Tap h11 = tap(), h12 = tap(), h21 = tap(), h22 = tap();
    return ncrs::ComplexChannel(h11, h12, h21, h22);
}

/// Gains log-uniform in [lo_db, hi_db].
inline ncrs::LinkGains random_gains(std::mt19937_64& rng, double lo_db = -10.0, double hi_db = 20.0)
{
    std::uniform_real_distribution<double> db(lo_db, hi_db);
    auto g = [&] { return std::pow(10.0, db(rng) / 10.0); };
    const double g11 = g(), g12 = g(), g21 = g(), g22 = g();
    return ncrs::LinkGains(g11, g12, g21, g22);
}

/// Grid oracle for the per-antenna DPC weighted sum rate of one encoding
/// order. The user encoded first is interfered by the other's covariance,
/// which is gridded (diagonal, correlation magnitude and phase at `step`
/// resolution of their ranges); the remaining per-antenna power goes to the
/// first user on a beam matched to its channel, which maximizes h S h^H under
/// a diagonal constraint (Cauchy-Schwarz).
inline double dpc_pac_grid_oracle(const ncrs::ComplexChannel& ch, double power, double mu, int first,
                                  double step = 0.05)
{
    const int other = 3 - first;
    const double half = power / 2.0;
    const int n = static_cast<int>(std::lround(1.0 / step));
    const std::complex<double> hf1 = ch.h(first, 1), hf2 = ch.h(first, 2);
    const std::complex<double> ho1 = ch.h(other, 1), ho2 = ch.h(other, 2);
    auto qf = [](double a, double b, std::complex<double> c, std::complex<double> x1, std::complex<double> x2) {
        return a * std::norm(x1) + b * std::norm(x2) + 2.0 * std::real(x1 * c * std::conj(x2));
    };
    double best = -1.0;
    for (int ia = 0; ia <= n; ++ia)
        for (int ib = 0; ib <= n; ++ib)
            for (int ir = 0; ir <= n; ++ir)
                for (int ip = 0; ip < n; ++ip) {
                    const double a = half * ia / n, b = half * ib / n;
                    const std::complex<double> c =
                        std::polar(std::sqrt(a * b) * ir / n, 2.0 * std::numbers::pi * ip / n);
                    // other user: interference free
                    const double r_other = std::log2(1.0 + std::max(0.0, qf(a, b, c, ho1, ho2)));
                    const double interf = std::max(0.0, qf(a, b, c, hf1, hf2));
                    const double amp = std::abs(hf1) * std::sqrt(half - a) + std::abs(hf2) * std::sqrt(half - b);
                    const double r_first = std::log2(1.0 + amp * amp / (1.0 + interf));
                    const double r1 = first == 1 ? r_first : r_other;
                    const double r2 = first == 1 ? r_other : r_first;
                    best = std::max(best, mu * r1 + (1.0 - mu) * r2);
                }
    return best;
}

} // namespace oracle

#endif
