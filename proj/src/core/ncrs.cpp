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

#include "ncrs/ncrs.hpp"
#include "ncrs/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace ncrs {

namespace {

double log2_1p(double x)
{
    return std::log1p(x) / std::numbers::ln2;
}

constexpr int kSupportScan = 17;
constexpr double kLocalMargin = 1e-3;

bool in_unit(double x)
{
    return x >= 0.0 && x <= 1.0;
}

struct PartialRates {
    double r1p;
    double r2p;
    double rc;
};

PartialRates partial_rates(const LinkGains& g, double l1, double l2)
{
    const double r1p = log2_1p(l1 * g.g11() / (1.0 + l2 * g.g12()));
    const double r2p = log2_1p(l2 * g.g22() / (1.0 + l1 * g.g21()));
    // common message decoded at each receiver with both private signals as noise
    const double rc1 = log2_1p(((1.0 - l1) * g.g11() + (1.0 - l2) * g.g12()) /
                               (1.0 + l1 * g.g11() + l2 * g.g12()));
    const double rc2 = log2_1p(((1.0 - l1) * g.g21() + (1.0 - l2) * g.g22()) /
                               (1.0 + l1 * g.g21() + l2 * g.g22()));
    return {r1p, r2p, std::min(rc1, rc2)};
}

// Weighted objective of the better alpha endpoint.
double support_value(const PartialRates& r, double mu)
{
    return mu * r.r1p + (1.0 - mu) * r.r2p + std::max(mu, 1.0 - mu) * r.rc;
}

struct GlobalMax {
    double l1;
    double l2;
    double value;
};

// Profile search over lambda1 of the best lambda2, each a coarse scan plus
// golden refinement over the whole range, so maxima on the rc1 = rc2 ridge
// are found wherever they sit.
GlobalMax global_support(const LinkGains& g, double mu)
{
    double l2_at = 0.0;
    auto inner = [&](double t1) {
        const ScalarMax m = grid_refine_max(
            [&](double t2) { return support_value(partial_rates(g, t1, t2), mu); }, 0.0, 1.0,
            kSupportScan, kGoldenTolerance);
        l2_at = m.x;
        return m.value;
    };
    const ScalarMax outer = grid_refine_max(inner, 0.0, 1.0, kSupportScan, kGoldenTolerance);
    inner(outer.x);
    return {outer.x, l2_at, outer.value};
}

void check_grid(int grid_steps)
{
    if (grid_steps < 2)
        fail("NCRS frontier grid needs at least two steps per axis");
}

} // namespace

SplitParams::SplitParams(double lambda1_, double lambda2_, double alpha_)
    : lambda1(lambda1_), lambda2(lambda2_), alpha(alpha_)
{
    if (!in_unit(lambda1) || !in_unit(lambda2) || !in_unit(alpha))
        fail("split parameters must lie in [0, 1]");
}

NcrsRates ncrs_rates(const LinkGains& g, const SplitParams& s)
{
    const PartialRates p = partial_rates(g, s.lambda1, s.lambda2);
    NcrsRates r;
    r.r1p = p.r1p;
    r.r2p = p.r2p;
    r.rc = p.rc;
    r.r1 = p.r1p + s.alpha * p.rc;
    r.r2 = p.r2p + (1.0 - s.alpha) * p.rc;
    return r;
}

NcrsFrontier ncrs_frontier_detailed(const LinkGains& g, int grid_steps, double refine_tol)
{
    check_grid(grid_steps);
    const double step = 1.0 / (grid_steps - 1);
    auto coord = [&](int k) { return k + 1 == grid_steps ? 1.0 : k * step; };

    std::vector<PartialRates> grid;
    grid.reserve(static_cast<std::size_t>(grid_steps) * grid_steps);
    std::vector<RatePoint> points;
    std::vector<SplitParams> generators;
    points.reserve(2 * grid.capacity());
    generators.reserve(2 * grid.capacity());
    for (int i = 0; i < grid_steps; ++i) {
        for (int j = 0; j < grid_steps; ++j) {
            const double l1 = coord(i);
            const double l2 = coord(j);
            const PartialRates r = partial_rates(g, l1, l2);
            grid.push_back(r);
            points.push_back({r.r1p + r.rc, r.r2p});
            generators.emplace_back(l1, l2, 1.0);
            points.push_back({r.r1p, r.r2p + r.rc});
            generators.emplace_back(l1, l2, 0.0);
        }
    }

    // every candidate point remembers the parameters that produced it
    using Key = std::pair<double, double>;
    std::map<Key, SplitParams> origin;
    for (std::size_t k = 0; k < points.size(); ++k)
        origin.emplace(Key{points[k].r1, points[k].r2}, generators[k]);

    Frontier hull = upper_hull(points);
    if (refine_tol > 0.0) {
        auto support = [&](double mu, const RatePoint& left, const RatePoint& right) {
            const auto objective = [&](double l1, double l2) {
                return support_value(partial_rates(g, l1, l2), mu);
            };
            // the construction grid's best point is the fallback
            std::size_t best = 0;
            double best_value = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double v = support_value(grid[k], mu);
                if (v > best_value) {
                    best_value = v;
                    best = k;
                }
            }
            double l1 = coord(static_cast<int>(best / grid_steps));
            double l2 = coord(static_cast<int>(best % grid_steps));

            const auto gl = origin.find(Key{left.r1, left.r2});
            const auto gr = origin.find(Key{right.r1, right.r2});
            if (gl != origin.end() && gr != origin.end()) {
                // Boundary parameters vary continuously, so the support
                // between two vertices lives near their generators.
                const SplitParams& a = gl->second;
                const SplitParams& b = gr->second;
                const double w1 = std::abs(a.lambda1 - b.lambda1) + kLocalMargin;
                const double w2 = std::abs(a.lambda2 - b.lambda2) + kLocalMargin;
                const double lo[2] = {std::max(0.0, std::min(a.lambda1, b.lambda1) - w1),
                                      std::max(0.0, std::min(a.lambda2, b.lambda2) - w2)};
                const double hi[2] = {std::min(1.0, std::max(a.lambda1, b.lambda1) + w1),
                                      std::min(1.0, std::max(a.lambda2, b.lambda2) + w2)};
                const auto x = profile_golden_max(
                    [&](std::span<const double> v) { return objective(v[0], v[1]); }, lo, hi);
                const double v = objective(x[0], x[1]);
                if (v > best_value) {
                    best_value = v;
                    l1 = x[0];
                    l2 = x[1];
                }
            } else {
                const GlobalMax m = global_support(g, mu);
                if (m.value > best_value) {
                    best_value = m.value;
                    l1 = m.l1;
                    l2 = m.l2;
                }
            }
            const SplitParams s(l1, l2, mu >= 0.5 ? 1.0 : 0.0);
            const NcrsRates r = ncrs_rates(g, s);
            const RatePoint p{r.r1, r.r2};
            origin.emplace(Key{p.r1, p.r2}, s);
            return p;
        };
        hull = refine_upper_hull(points, support, refine_tol);
    }

    // Axis intercepts borrow the parameters of the vertex they extend.
    NcrsFrontier out{hull, {}};
    const auto& v = hull.points();
    out.generators.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        auto it = origin.find(Key{v[k].r1, v[k].r2});
        if (it == origin.end() && k == 0 && v.size() > 1)
            it = origin.find(Key{v[1].r1, v[1].r2});
        if (it == origin.end() && k + 1 == v.size() && k > 0)
            it = origin.find(Key{v[k - 1].r1, v[k - 1].r2});
        if (it == origin.end())
            throw Error(ErrorCode::invalid_argument, "internal: frontier vertex without generator");
        out.generators.push_back(it->second);
    }
    return out;
}

Frontier ncrs_frontier(const LinkGains& g, int grid_steps, double refine_tol)
{
    return ncrs_frontier_detailed(g, grid_steps, refine_tol).frontier;
}

NcrsWeightedMax ncrs_weighted_max(const LinkGains& g, double mu, int grid_steps,
                                  const OptimizerOptions& opts)
{
    if (!(mu >= 0.0 && mu <= 1.0))
        fail("weight mu must lie in [0, 1]");
    const double alpha = mu >= 0.5 ? 1.0 : 0.0;
    const auto evaluator = [&](std::span<const double> x) {
        const NcrsRates r = ncrs_rates(g, SplitParams(x[0], x[1], alpha));
        return RatePoint{r.r1, r.r2};
    };
    WeightedMax best = weighted_rate_max(evaluator, 2, mu, grid_steps, opts);
    const GlobalMax global = global_support(g, mu);
    if (global.value > best.objective) {
        best.params = {global.l1, global.l2};
        best.objective = global.value;
    }

    double a = alpha;
    if (mu == 0.5) {
        // objective is flat in alpha here; pick the most balanced split
        const PartialRates p = partial_rates(g, best.params[0], best.params[1]);
        a = p.rc > 0.0 ? std::clamp((p.r2p + p.rc - p.r1p) / (2.0 * p.rc), 0.0, 1.0) : 0.5;
    }
    const SplitParams s(best.params[0], best.params[1], a);
    const NcrsRates r = ncrs_rates(g, s);
    return {s, r, mu * r.r1 + (1.0 - mu) * r.r2};
}

double symmetric_sum_rate(const SymmetricGains& sg, double lambda)
{
    if (!in_unit(lambda))
        fail("lambda must lie in [0, 1]");
    const double total = sg.snr + sg.inr;
    const double common = log2_1p((1.0 - lambda) * total / (1.0 + lambda * total));
    const double priv = log2_1p(lambda * sg.snr / (1.0 + lambda * sg.inr));
    return common + 2.0 * priv;
}

double optimal_lambda_symmetric(const SymmetricGains& sg)
{
    if (sg.snr <= sg.inr)
        return 0.0;
    if (sg.inr == 0.0)
        return 1.0;
    return std::min((sg.snr - sg.inr) / (sg.inr * (sg.snr + sg.inr)), 1.0);
}

std::vector<SweepRow> symmetric_sweep(double snr, std::span<const double> ratio_grid)
{
    if (!(snr > 1.0) || !std::isfinite(snr))
        fail("symmetric sweep needs snr > 1 (linear)");
    const double awgn = 2.0 * log2_1p(snr);
    std::vector<SweepRow> rows;
    rows.reserve(ratio_grid.size());
    for (double ratio : ratio_grid) {
        if (!(ratio >= 0.0 && ratio <= 1.25))
            fail("sweep ratios must lie in [0, 1.25]");
        const SymmetricGains sg(snr, std::pow(snr, ratio));
        SweepRow row;
        row.ratio = ratio;
        row.lambda_star = optimal_lambda_symmetric(sg);
        row.sum_rate = symmetric_sum_rate(sg, row.lambda_star);
        row.sum_rate_over_awgn = row.sum_rate / awgn;
        rows.push_back(row);
    }
    return rows;
}

} // namespace ncrs
