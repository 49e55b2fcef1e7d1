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

#include "ncrs/optimize.hpp"
#include "ncrs/error.hpp"

#include <cmath>
#include <limits>

namespace ncrs {

namespace {

constexpr double kInvPhi = 0.6180339887498949;   // 1/phi

void check_interval(double lo, double hi, double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        fail("search tolerance must be positive");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        fail("search interval needs lo < hi");
}

// Golden search without argument checks; also used on degenerate brackets.
ScalarMax golden(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    ScalarMax best = fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm >= best.value)
        best = {mid, fm};
    // monotone functions converge onto an endpoint; report it exactly
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx > best.value)
            best = {x, fx};
    }
    return best;
}

} // namespace

void OptimizerOptions::validate() const
{
    if (starts < 1)
        fail("optimizer needs at least one start");
    if (max_iterations < 1)
        fail("optimizer needs at least one iteration");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance))
        fail("optimizer tolerance must be positive");
}

ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    check_interval(lo, hi, tol);
    return golden(f, lo, hi, tol);
}

ScalarMax grid_refine_max(const std::function<double(double)>& f, double lo, double hi,
                          int grid_steps, double tol)
{
    check_interval(lo, hi, tol);
    if (grid_steps < 2)
        fail("grid needs at least two points");
    const double step = (hi - lo) / (grid_steps - 1);
    ScalarMax best{lo, -std::numeric_limits<double>::infinity()};
    int best_k = 0;
    for (int k = 0; k < grid_steps; ++k) {
        const double x = k + 1 == grid_steps ? hi : lo + step * k;
        const double v = f(x);
        if (v > best.value) {
            best = {x, v};
            best_k = k;
        }
    }
    const double a = std::max(lo, lo + step * (best_k - 1));
    const double b = std::min(hi, lo + step * (best_k + 1));
    if (b - a > tol) {
        const ScalarMax refined = golden(f, a, b, tol);
        if (refined.value > best.value)
            best = refined;
    }
    return best;
}

std::vector<double> profile_golden_max(const BoxObjective& f, std::span<const double> lo,
                                       std::span<const double> hi, double tol)
{
    if (lo.size() != hi.size() || lo.empty())
        fail("profile search needs matching, non-empty bounds");
    const std::size_t n = lo.size();
    std::vector<double> x(lo.begin(), lo.end());

    // Maximizes over coordinates [dim, n) with the leading ones fixed and
    // leaves the maximizer in x.
    std::function<double(std::size_t)> solve = [&](std::size_t dim) -> double {
        if (dim == n)
            return f(x);
        if (!(hi[dim] - lo[dim] > tol)) {
            x[dim] = lo[dim];
            return solve(dim + 1);
        }
        const auto profile = [&](double t) {
            x[dim] = t;
            return solve(dim + 1);
        };
        const ScalarMax best = golden(profile, lo[dim], hi[dim], tol);
        x[dim] = best.x;
        return solve(dim + 1);
    };
    solve(0);
    return x;
}

WeightedMax weighted_rate_max(const RateEvaluator& evaluator, std::size_t dims, double mu,
                              int grid_steps, const OptimizerOptions& opts)
{
    opts.validate();
    if (dims == 0)
        fail("weighted_rate_max needs at least one parameter");
    if (grid_steps < 2)
        fail("grid needs at least two points per axis");
    if (!(mu >= 0.0 && mu <= 1.0))
        fail("weight mu must lie in [0, 1]");

    const auto objective = [&](const RatePoint& p) { return mu * p.r1 + (1.0 - mu) * p.r2; };
    const double step = 1.0 / (grid_steps - 1);
    auto coord = [&](int k) { return k + 1 == grid_steps ? 1.0 : k * step; };

    WeightedMax best;
    best.objective = -std::numeric_limits<double>::infinity();
    std::vector<int> idx(dims, 0);
    std::vector<double> x(dims);
    for (;;) {
        for (std::size_t d = 0; d < dims; ++d)
            x[d] = coord(idx[d]);
        const RatePoint p = evaluator(x);
        const double v = objective(p);
        if (v > best.objective) {
            best.objective = v;
            best.params = x;
            best.point = p;
        }
        std::size_t d = 0;
        while (d < dims && ++idx[d] == grid_steps)
            idx[d++] = 0;
        if (d == dims)
            break;
    }

    std::vector<double> lo(dims), hi(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        lo[d] = std::max(0.0, best.params[d] - step);
        hi[d] = std::min(1.0, best.params[d] + step);
    }
    const auto refined = profile_golden_max(
        [&](std::span<const double> v) { return objective(evaluator(v)); }, lo, hi, kGoldenTolerance);
    const RatePoint p = evaluator(refined);
    if (objective(p) > best.objective) {
        best.objective = objective(p);
        best.params = refined;
        best.point = p;
    }
    return best;
}

AscentResult coordinate_ascent_max(const BoxObjective& f, std::span<const Coordinate> box,
                                   const OptimizerOptions& opts,
                                   std::span<const std::vector<double>> fixed_starts)
{
    opts.validate();
    if (box.empty())
        fail("coordinate ascent needs at least one coordinate");
    for (const auto& c : box)
        if (!(c.lo < c.hi))
            fail("coordinate ascent needs lo < hi on every coordinate");
    for (const auto& s : fixed_starts)
        if (s.size() != box.size())
            fail("fixed start has the wrong dimension");

    constexpr int kScan = 8;
    const std::size_t n = box.size();
    StartSampler sampler(opts.seed);

    AscentResult best;
    best.value = -std::numeric_limits<double>::infinity();
    const int total = static_cast<int>(fixed_starts.size()) + opts.starts;

    std::vector<double> x(n);
    for (int s = 0; s < total; ++s) {
        if (s < static_cast<int>(fixed_starts.size())) {
            x = fixed_starts[s];
        } else {
            for (std::size_t j = 0; j < n; ++j)
                x[j] = box[j].lo + sampler.uniform() * (box[j].hi - box[j].lo);
        }
        double value = f(x);
        bool converged = false;
        int it = 0;
        while (it < opts.max_iterations) {
            ++it;
            const double before = value;
            for (std::size_t j = 0; j < n; ++j) {
                const Coordinate& c = box[j];
                const double span = c.hi - c.lo;
                const double keep = x[j];
                // periodic coordinates are searched over a window centred on
                // the current value and wrapped back afterwards
                const double a = c.periodic ? keep - 0.5 * span : c.lo;
                const double b = c.periodic ? keep + 0.5 * span : c.hi;
                auto wrap = [&](double t) {
                    if (!c.periodic)
                        return t;
                    double w = std::fmod(t - c.lo, span);
                    if (w < 0.0)
                        w += span;
                    return c.lo + w;
                };
                auto line = [&](double t) {
                    x[j] = wrap(t);
                    return f(x);
                };
                const ScalarMax m = grid_refine_max(line, a, b, kScan + 1, kGoldenTolerance * span);
                if (m.value > value) {
                    x[j] = wrap(m.x);
                    value = m.value;
                } else {
                    x[j] = keep;
                }
            }
            if (value - before < opts.tolerance) {
                converged = true;
                break;
            }
        }
        if (value > best.value) {
            best.x = x;
            best.value = value;
            best.converged = converged;
            best.iterations = it;
            best.start_index = s;
        }
    }
    return best;
}

} // namespace ncrs
