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

#include "ncrs/baselines.hpp"
#include "ncrs/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace ncrs {

namespace {

double log2_1p(double x)
{
    return std::log1p(x) / std::numbers::ln2;
}

constexpr double kDpcRefineTolerance = 1e-6;

void check_grid(int grid_steps)
{
    if (grid_steps < 2)
        fail("baseline grid needs at least two steps");
}

void check_user(int user)
{
    if (user != 1 && user != 2)
        fail("user must be 1 or 2");
}

double grid_coord(int k, int steps)
{
    return k + 1 == steps ? 1.0 : static_cast<double>(k) / (steps - 1);
}

double row_norm2(const ComplexChannel& ch, int user)
{
    const double m1 = ch.tap(user, 1).magnitude;
    const double m2 = ch.tap(user, 2).magnitude;
    return m1 * m1 + m2 * m2;
}

} // namespace

std::string_view to_string(BaselineKind kind)
{
    switch (kind) {
    case BaselineKind::dpc: return "dpc";
    case BaselineKind::dpc_pac: return "dpc_pac";
    case BaselineKind::miso: return "miso";
    case BaselineKind::miso_pac: return "miso_pac";
    case BaselineKind::sc: return "sc";
    case BaselineKind::fdm: return "fdm";
    case BaselineKind::hk_sym: return "hk_sym";
    }
    return "unknown";
}

std::optional<BaselineKind> parse_baseline(std::string_view name)
{
    for (auto k : {BaselineKind::dpc, BaselineKind::dpc_pac, BaselineKind::miso, BaselineKind::miso_pac,
                   BaselineKind::sc, BaselineKind::fdm, BaselineKind::hk_sym})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

bool requires_full_csit(BaselineKind kind)
{
    return kind == BaselineKind::dpc || kind == BaselineKind::dpc_pac || kind == BaselineKind::miso ||
           kind == BaselineKind::miso_pac;
}

bool Covariance2::is_psd(double tol) const
{
    return a >= -tol && b >= -tol && std::norm(c) <= a * b + tol;
}

double Covariance2::quadratic_form(std::complex<double> h1, std::complex<double> h2) const
{
    const double v = a * std::norm(h1) + b * std::norm(h2) + 2.0 * std::real(h1 * c * std::conj(h2));
    return std::max(v, 0.0);
}

Frontier sc_frontier(const LinkGains& g, int grid_steps)
{
    check_grid(grid_steps);
    const double big1 = g.g11() + g.g12();
    const double big2 = g.g21() + g.g22();
    const bool user1_strong = big1 >= big2;
    const double strong = user1_strong ? big1 : big2;
    const double weak = user1_strong ? big2 : big1;

    std::vector<RatePoint> pts;
    pts.reserve(grid_steps);
    for (int k = 0; k < grid_steps; ++k) {
        const double beta = grid_coord(k, grid_steps);   // weak user's power share
        const double r_weak = log2_1p(beta * weak / (1.0 + (1.0 - beta) * weak));
        const double r_strong = log2_1p((1.0 - beta) * strong);
        pts.push_back(user1_strong ? RatePoint{r_strong, r_weak} : RatePoint{r_weak, r_strong});
    }
    return upper_hull(pts);
}

Frontier fdm_frontier(const LinkGains& g, int grid_steps)
{
    check_grid(grid_steps);
    const double big1 = g.g11() + g.g12();
    const double big2 = g.g21() + g.g22();
    std::vector<RatePoint> pts;
    pts.reserve(grid_steps);
    for (int k = 0; k < grid_steps; ++k) {
        const double t = grid_coord(k, grid_steps);
        const double r1 = t > 0.0 ? t * log2_1p(big1 / t) : 0.0;
        const double r2 = t < 1.0 ? (1.0 - t) * log2_1p(big2 / (1.0 - t)) : 0.0;
        pts.push_back({r1, r2});
    }
    return upper_hull(pts);
}

double hk_symmetric_sum_rate_at(const SymmetricGains& sg, double lambda)
{
    if (!(lambda >= 0.0 && lambda <= 1.0))
        fail("lambda must lie in [0, 1]");
    const double total = sg.snr + sg.inr;
    const double noise = 1.0 + lambda * total;
    // both common messages jointly decoded as a two-user MAC
    const double mac_sum = 0.5 * log2_1p((1.0 - lambda) * total / noise);
    const double mac_single = log2_1p((1.0 - lambda) * std::min(sg.snr, sg.inr) / noise);
    const double common_each = std::min(mac_sum, mac_single);
    const double priv = log2_1p(lambda * sg.snr / (1.0 + lambda * sg.inr));
    return 2.0 * priv + 2.0 * common_each;
}

double hk_symmetric_sum_rate(const SymmetricGains& sg, int grid_steps)
{
    check_grid(grid_steps);
    return grid_refine_max([&](double l) { return hk_symmetric_sum_rate_at(sg, l); }, 0.0, 1.0, grid_steps)
        .value;
}

double miso_capacity(const ComplexChannel& ch, int user, const PowerBudget& p)
{
    check_user(user);
    const double n2 = row_norm2(ch, user);
    return n2 > 0.0 ? log2_1p(p.total() * n2) : 0.0;
}

double miso_pac_capacity(const ComplexChannel& ch, int user, const PowerBudget& p)
{
    check_user(user);
    const double amp = ch.tap(user, 1).magnitude + ch.tap(user, 2).magnitude;
    return amp > 0.0 ? log2_1p(p.per_antenna() * amp * amp) : 0.0;
}

namespace {

Frontier time_sharing(double c1, double c2)
{
    const RatePoint pts[2] = {{c1, 0.0}, {0.0, c2}};
    return upper_hull(pts);
}

} // namespace

Frontier miso_frontier(const ComplexChannel& ch, const PowerBudget& p)
{
    return time_sharing(miso_capacity(ch, 1, p), miso_capacity(ch, 2, p));
}

Frontier miso_pac_frontier(const ComplexChannel& ch, const PowerBudget& p)
{
    return time_sharing(miso_pac_capacity(ch, 1, p), miso_pac_capacity(ch, 2, p));
}

Frontier dpc_frontier(const ComplexChannel& ch, const PowerBudget& p, int grid_steps)
{
    check_grid(grid_steps);
    const double power = p.total();
    const double n1 = row_norm2(ch, 1);
    const double n2 = row_norm2(ch, 2);
    const std::complex<double> inner = ch.h(1, 1) * std::conj(ch.h(2, 1)) + ch.h(1, 2) * std::conj(ch.h(2, 2));
    const double gram_det = std::max(n1 * n2 - std::norm(inner), 0.0);

    // dual MAC with uplink powers (q1, P - q1)
    auto sum_rate = [&](double q1) {
        const double q2 = power - q1;
        return std::log2(1.0 + q1 * n1 + q2 * n2 + q1 * q2 * gram_det);
    };
    auto user1_last = [&](double q1) {   // user 1 decoded last: interference free
        const double r1 = log2_1p(q1 * n1);
        return RatePoint{r1, std::max(sum_rate(q1) - r1, 0.0)};
    };
    auto user2_last = [&](double q1) {
        const double r2 = log2_1p((power - q1) * n2);
        return RatePoint{std::max(sum_rate(q1) - r2, 0.0), r2};
    };

    std::vector<RatePoint> pts;
    pts.reserve(2 * static_cast<std::size_t>(grid_steps));
    for (int k = 0; k < grid_steps; ++k) {
        const double q1 = power * grid_coord(k, grid_steps);
        pts.push_back(user1_last(q1));
        pts.push_back(user2_last(q1));
    }

    // In the MAC the user with the larger weight is decoded last, and the
    // weighted sum rate is then concave in q1.
    auto support = [&](double mu, const RatePoint&, const RatePoint&) {
        if (mu >= 0.5) {
            const auto m = golden_section_max(
                [&](double q1) { return (1.0 - mu) * sum_rate(q1) + (2.0 * mu - 1.0) * log2_1p(q1 * n1); },
                0.0, power, kGoldenTolerance * power);
            return user1_last(m.x);
        }
        const auto m = golden_section_max(
            [&](double q1) { return mu * sum_rate(q1) + (1.0 - 2.0 * mu) * log2_1p((power - q1) * n2); },
            0.0, power, kGoldenTolerance * power);
        return user2_last(m.x);
    };
    return refine_upper_hull(pts, support, kDpcRefineTolerance);
}

std::vector<double> scalarization_weights(int count)
{
    if (count < 2)
        fail("need at least two scalarization weights");
    std::vector<double> mu(count);
    for (int k = 0; k < count; ++k)
        mu[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * k / (count - 1)));
    mu.front() = 0.0;
    mu.back() = 1.0;
    return mu;
}

namespace {

struct TapValues {
    std::complex<double> h11, h12, h21, h22;

    explicit TapValues(const ComplexChannel& ch)
        : h11(ch.h(1, 1)), h12(ch.h(1, 2)), h21(ch.h(2, 1)), h22(ch.h(2, 2))
    {
    }
};

RatePoint rates_of(const TapValues& t, const Covariance2& s1, const Covariance2& s2, int first)
{
    const auto [h11, h12, h21, h22] = t;
    if (first == 1) {
        const double r2 = log2_1p(s2.quadratic_form(h21, h22));
        const double r1 = log2_1p(s1.quadratic_form(h11, h12) / (1.0 + s2.quadratic_form(h11, h12)));
        return {r1, r2};
    }
    const double r1 = log2_1p(s1.quadratic_form(h11, h12));
    const double r2 = log2_1p(s2.quadratic_form(h21, h22) / (1.0 + s1.quadratic_form(h21, h22)));
    return {r1, r2};
}

} // namespace

RatePoint dpc_rates(const ComplexChannel& ch, const Covariance2& s1, const Covariance2& s2, int first)
{
    check_user(first);
    return rates_of(TapValues(ch), s1, s2, first);
}

namespace {

// Search coordinates: diagonal of the later-encoded user's covariance as
// fractions of the per-antenna budget, then its correlation magnitude and
// phase. The user encoded first sees that covariance as interference and
// nothing else, so its best covariance is the beam matched to its own row
// with all remaining power on each antenna. Every point is feasible and PSD.
struct CovarianceBox {
    double half;
    double matched_phase;   // arg(c) aligning the first user's beam

    Covariance2 later(std::span<const double> x) const
    {
        Covariance2 s;
        s.a = x[0] * half;
        s.b = x[1] * half;
        s.c = std::polar(x[2] * std::sqrt(s.a * s.b), x[3]);
        return s;
    }

    Covariance2 first(const Covariance2& later) const
    {
        Covariance2 s;
        s.a = std::max(0.0, half - later.a);
        s.b = std::max(0.0, half - later.b);
        s.c = std::polar(std::sqrt(s.a * s.b), matched_phase);
        return s;
    }
};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi)
{
    double w = std::fmod(phi, kTwoPi);
    return w < 0.0 ? w + kTwoPi : w;
}

} // namespace

DpcPacSolution dpc_pac_weighted_max(const ComplexChannel& ch, const PowerBudget& p, double mu,
                                    int first, const OptimizerOptions& opts)
{
    check_user(first);
    if (!(mu >= 0.0 && mu <= 1.0))
        fail("weight mu must lie in [0, 1]");
    const int later = 3 - first;
    // all power on one user, beamformed with phases matched to its row
    auto matched = [&](int user) {
        return wrap_phase(ch.tap(user, 2).phase - ch.tap(user, 1).phase);
    };
    const CovarianceBox box{p.per_antenna(), matched(first)};
    const TapValues taps(ch);
    auto decode = [&](std::span<const double> x) {
        const Covariance2 l = box.later(x);
        const Covariance2 f = box.first(l);
        return first == 1 ? std::pair{f, l} : std::pair{l, f};
    };
    const std::array<Coordinate, 4> coords{{
        {0.0, 1.0, false}, {0.0, 1.0, false}, {0.0, 1.0, false}, {0.0, kTwoPi, true},
    }};
    auto objective = [&](std::span<const double> x) {
        const auto [s1, s2] = decode(x);
        const RatePoint r = rates_of(taps, s1, s2, first);
        return mu * r.r1 + (1.0 - mu) * r.r2;
    };

    const std::vector<double> fixed[3] = {
        {0.0, 0.0, 0.0, 0.0},
        {1.0, 1.0, 1.0, matched(later)},
        {0.5, 0.5, 1.0, matched(later)},
    };
    const AscentResult best = coordinate_ascent_max(objective, coords, opts, fixed);

    DpcPacSolution sol;
    sol.mu = mu;
    sol.first = first;
    std::tie(sol.s1, sol.s2) = decode(best.x);
    sol.rates = dpc_rates(ch, sol.s1, sol.s2, first);
    sol.objective = best.value;
    sol.converged = best.converged;
    return sol;
}

DpcPacResult dpc_pac_frontier(const ComplexChannel& ch, const PowerBudget& p,
                              const OptimizerOptions& opts, int weight_count)
{
    opts.validate();
    std::vector<DpcPacSolution> solutions;
    std::vector<RatePoint> pts;
    bool converged = true;
    for (double mu : scalarization_weights(weight_count)) {
        for (int first : {1, 2}) {
            solutions.push_back(dpc_pac_weighted_max(ch, p, mu, first, opts));
            pts.push_back(solutions.back().rates);
            converged = converged && solutions.back().converged;
        }
    }
    return {upper_hull(pts), converged, std::move(solutions)};
}

} // namespace ncrs
