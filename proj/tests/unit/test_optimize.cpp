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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncrs/error.hpp"
#include "ncrs/ncrs.hpp"
#include "ncrs/optimize.hpp"
#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

using namespace ncrs;

TEST_CASE("golden_section_max - quadratic")
{
    const auto r = golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-8);
    CHECK(std::abs(r.x - 0.3) <= 1e-8);
    CHECK(r.value == doctest::Approx(0.0).epsilon(0).scale(1).epsilon(1e-15));
}

TEST_CASE("golden_section_max - symmetric sum rate at snr 10, inr 1")
{
    const auto r = golden_section_max([](double l) { return oracle::sym_sum_rate(10.0, 1.0, l); }, 0.0, 1.0);
    CHECK(std::abs(r.x - 9.0 / 11.0) <= 1e-6);
    CHECK(r.value == doctest::Approx(5.181898).epsilon(1e-6));
}

TEST_CASE("golden_section_max - constant and boundary maxima")
{
    const auto c = golden_section_max([](double) { return 2.5; }, -1.0, 3.0);
    CHECK(c.x >= -1.0);
    CHECK(c.x <= 3.0);
    CHECK(c.value == 2.5);

    const auto inc = golden_section_max([](double x) { return x; }, 0.0, 1.0);
    CHECK(inc.x == 1.0);
    const auto dec = golden_section_max([](double x) { return -x; }, 0.0, 1.0);
    CHECK(dec.x == 0.0);
}

TEST_CASE("golden_section_max - argument errors")
{
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(golden_section_max(f, 0.0, 1.0, 0.0), Error);
    CHECK_THROWS_AS(golden_section_max(f, 0.0, 1.0, -1.0), Error);
    CHECK_THROWS_AS(golden_section_max(f, 1.0, 1.0), Error);
    CHECK_THROWS_AS(golden_section_max(f, 2.0, 1.0), Error);
    CHECK_THROWS_AS(golden_section_max(f, 0.0, std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("grid_refine_max escapes a local maximum")
{
    // two bumps, the taller one narrow and near the right edge
    const auto f = [](double x) {
        return std::exp(-50.0 * (x - 0.2) * (x - 0.2)) + 1.5 * std::exp(-2000.0 * (x - 0.9) * (x - 0.9));
    };
    const auto r = grid_refine_max(f, 0.0, 1.0, 101);
    CHECK(r.x == doctest::Approx(0.9).epsilon(1e-6));
    CHECK(r.value >= 1.5 - 1e-12);
    CHECK_THROWS_AS(grid_refine_max(f, 0.0, 1.0, 1), Error);
}

TEST_CASE("profile_golden_max - separable concave objective")
{
    const BoxObjective f = [](std::span<const double> x) {
        return -(x[0] - 0.25) * (x[0] - 0.25) - 2.0 * (x[1] - 0.75) * (x[1] - 0.75);
    };
    const double lo[] = {0.0, 0.0}, hi[] = {1.0, 1.0};
    const auto x = profile_golden_max(f, lo, hi, 1e-9);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == doctest::Approx(0.25).epsilon(1e-7));
    CHECK(x[1] == doctest::Approx(0.75).epsilon(1e-7));
}

namespace {

RateEvaluator ncrs_evaluator(const LinkGains& g)
{
    return [g](std::span<const double> p) {
        const NcrsRates r = ncrs_rates(g, SplitParams(p[0], p[1], p[2]));
        return RatePoint{r.r1, r.r2};
    };
}

} // namespace

TEST_CASE("weighted_rate_max - single user weight")
{
    const LinkGains g(10, 0, 0, 10);
    const auto w = weighted_rate_max(ncrs_evaluator(g), 3, 1.0, 11, OptimizerOptions{});
    CHECK(w.point.r1 == doctest::Approx(std::log2(11.0)).epsilon(1e-9));
    CHECK(w.objective == doctest::Approx(std::log2(11.0)).epsilon(1e-9));

    const auto n = ncrs_weighted_max(g, 1.0, 11, OptimizerOptions{});
    CHECK(n.params.alpha == 1.0);
    CHECK(n.rates.r1 == doctest::Approx(std::log2(11.0)).epsilon(1e-9));
}

TEST_CASE("weighted_rate_max - mu 0 mirrors mu 1 under user exchange")
{
    const LinkGains g(8, 2, 3, 5);
    const OptimizerOptions opts;
    const auto a = ncrs_weighted_max(g, 1.0, 21, opts);
    const auto b = ncrs_weighted_max(g.swapped_users(), 0.0, 21, opts);
    CHECK(a.rates.r1 == doctest::Approx(b.rates.r2).epsilon(1e-9));
    CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));

    const LinkGains s(10, 1, 1, 10);
    const auto c = ncrs_weighted_max(s, 0.0, 21, opts);
    const auto d = ncrs_weighted_max(s, 1.0, 21, opts);
    CHECK(c.rates.r2 == doctest::Approx(d.rates.r1).epsilon(1e-9));
}

TEST_CASE("weighted_rate_max - equal weight on symmetric gains balances the users")
{
    for (const auto& [s, i] : {std::pair{10.0, 1.0}, {31.6, 3.0}, {5.0, 5.0}, {100.0, 40.0}}) {
        const auto w = ncrs_weighted_max(LinkGains(s, i, i, s), 0.5, 21, OptimizerOptions{});
        CHECK(std::abs(w.rates.r1 - w.rates.r2) <= 1e-6);
        // equal-weight optimum is half the symmetric sum-rate optimum
        const double lam = optimal_lambda_symmetric(SymmetricGains(s, i));
        CHECK(2.0 * w.objective >= symmetric_sum_rate(SymmetricGains(s, i), lam) - 1e-6);
    }
}

TEST_CASE("weighted_rate_max - deterministic")
{
    const LinkGains g(12, 3, 1.5, 7);
    for (double mu : {0.0, 0.2, 0.5, 0.7, 1.0}) {
        const auto a = weighted_rate_max(ncrs_evaluator(g), 3, mu, 11, OptimizerOptions{});
        const auto b = weighted_rate_max(ncrs_evaluator(g), 3, mu, 11, OptimizerOptions{});
        CHECK(a.params == b.params);
        CHECK(a.objective == b.objective);
    }
}

TEST_CASE("weighted_rate_max - refinement never loses to the coarse grid")
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
        const LinkGains g = oracle::random_gains(rng);
        const double mu = static_cast<double>(t % 9) / 8.0;
        const int steps = 6;
        const auto w = weighted_rate_max(ncrs_evaluator(g), 3, mu, steps, OptimizerOptions{});
        double best = -1.0;
        for (int a = 0; a < steps; ++a)
            for (int b = 0; b < steps; ++b)
                for (int c = 0; c < steps; ++c) {
                    const double l1 = a / (steps - 1.0), l2 = b / (steps - 1.0), al = c / (steps - 1.0);
                    const auto r = oracle::ncrs_direct(g.g11(), g.g12(), g.g21(), g.g22(), l1, l2, al);
                    best = std::max(best, mu * r.r1 + (1.0 - mu) * r.r2);
                }
        CHECK(w.objective >= best - 1e-12);
    }
}

TEST_CASE("weighted_rate_max - argument errors")
{
    const LinkGains g(1, 1, 1, 1);
    CHECK_THROWS_AS(weighted_rate_max(ncrs_evaluator(g), 3, 0.5, 1, OptimizerOptions{}), Error);
    CHECK_THROWS_AS(weighted_rate_max(ncrs_evaluator(g), 3, 1.5, 5, OptimizerOptions{}), Error);
    CHECK_THROWS_AS(weighted_rate_max(ncrs_evaluator(g), 3, -0.1, 5, OptimizerOptions{}), Error);
}

TEST_CASE("OptimizerOptions validation")
{
    CHECK_NOTHROW(OptimizerOptions{}.validate());
    CHECK_THROWS_AS((OptimizerOptions{0, 10, 1e-7, 1}.validate()), Error);
    CHECK_THROWS_AS((OptimizerOptions{1, 0, 1e-7, 1}.validate()), Error);
    CHECK_THROWS_AS((OptimizerOptions{1, 10, 0.0, 1}.validate()), Error);
}

TEST_CASE("StartSampler reproduces a fixed sequence")
{
    StartSampler a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(x == b.uniform());
        differs = differs || x != c.uniform();
    }
    CHECK(differs);
    // mt19937_64 is fully specified, so the first draw is platform independent
    std::mt19937_64 ref(42);
    CHECK(StartSampler(42).uniform() == static_cast<double>(ref() >> 11) * 0x1.0p-53);
}

TEST_CASE("coordinate_ascent_max - concave quadratic with a periodic coordinate")
{
    const double two_pi = 2.0 * std::numbers::pi;
    const BoxObjective f = [](std::span<const double> x) {
        return -(x[0] - 0.6) * (x[0] - 0.6) + std::cos(x[1] - 6.0);
    };
    const Coordinate box[] = {{0.0, 1.0, false}, {0.0, two_pi, true}};
    const auto r = coordinate_ascent_max(f, box, OptimizerOptions{});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(0.6).epsilon(1e-6));
    CHECK(r.x[1] == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coordinate_ascent_max - deterministic and prefers the lowest start on ties")
{
    const BoxObjective flat = [](std::span<const double>) { return 1.0; };
    const Coordinate box[] = {{0.0, 1.0, false}, {0.0, 1.0, false}};
    const auto r = coordinate_ascent_max(flat, box, OptimizerOptions{});
    CHECK(r.start_index == 0);

    const BoxObjective f = [](std::span<const double> x) {
        return std::sin(7.0 * x[0]) * std::cos(5.0 * x[1]) + 0.1 * x[0];
    };
    const auto a = coordinate_ascent_max(f, box, OptimizerOptions{});
    const auto b = coordinate_ascent_max(f, box, OptimizerOptions{});
    CHECK(a.x == b.x);
    CHECK(a.value == b.value);
    CHECK(a.start_index == b.start_index);
}

TEST_CASE("coordinate_ascent_max - fixed starts are honoured")
{
    const BoxObjective f = [](std::span<const double> x) { return -std::abs(x[0] - 0.123456); };
    const Coordinate box[] = {{0.0, 1.0, false}};
    const std::vector<std::vector<double>> fixed = {{0.123456}};
    OptimizerOptions opts;
    opts.starts = 1;
    const auto r = coordinate_ascent_max(f, box, opts, fixed);
    CHECK(r.value >= -1e-12);
}
