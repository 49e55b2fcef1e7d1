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

#include "ncrs/channel.hpp"
#include "ncrs/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ncrs {

namespace {

void check_gain(double g, const char* name)
{
    if (!std::isfinite(g) || g < 0.0)
        fail(std::string("link gain ") + name + " must be finite and non-negative");
}

double wrap_phase(double phase)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phase, two_pi);
    if (w < 0.0)
        w += two_pi;
    // fmod of a value just below a multiple can round up to two_pi
    return w >= two_pi ? 0.0 : w;
}

int tap_index(int user, int antenna)
{
    if ((user != 1 && user != 2) || (antenna != 1 && antenna != 2))
        fail("user and antenna indices must be 1 or 2");
    return (user - 1) * 2 + (antenna - 1);
}

} // namespace

PowerBudget::PowerBudget(double total) : total_(total)
{
    if (!std::isfinite(total) || total <= 0.0)
        fail("total power must be positive and finite");
}

LinkGains::LinkGains(double g11, double g12, double g21, double g22)
    : g11_(g11), g12_(g12), g21_(g21), g22_(g22)
{
    check_gain(g11, "g11");
    check_gain(g12, "g12");
    check_gain(g21, "g21");
    check_gain(g22, "g22");
}

double LinkGains::at(int user, int antenna) const
{
    switch (tap_index(user, antenna)) {
    case 0: return g11_;
    case 1: return g12_;
    case 2: return g21_;
    default: return g22_;
    }
}

ComplexChannel::ComplexChannel(Tap h11, Tap h12, Tap h21, Tap h22) : taps_{h11, h12, h21, h22}
{
    for (auto& t : taps_) {
        if (!std::isfinite(t.magnitude) || t.magnitude < 0.0)
            fail("channel magnitudes must be finite and non-negative");
        if (!std::isfinite(t.phase))
            fail("channel phases must be finite");
        t.phase = wrap_phase(t.phase);
    }
}

ComplexChannel ComplexChannel::from_values(std::complex<double> h11, std::complex<double> h12,
                                           std::complex<double> h21, std::complex<double> h22)
{
    auto tap = [](std::complex<double> v) { return Tap{std::abs(v), std::arg(v)}; };
    return ComplexChannel(tap(h11), tap(h12), tap(h21), tap(h22));
}

const Tap& ComplexChannel::tap(int user, int antenna) const
{
    return taps_[tap_index(user, antenna)];
}

SymmetricGains::SymmetricGains(double snr_, double inr_) : snr(snr_), inr(inr_)
{
    if (!std::isfinite(snr) || snr < 0.0 || !std::isfinite(inr) || inr < 0.0)
        fail("snr and inr must be finite and non-negative");
}

LinkGains gains_from_channel(const ComplexChannel& ch, const PowerBudget& p)
{
    const double half = p.per_antenna();
    auto g = [&](int u, int a) {
        const double m = ch.tap(u, a).magnitude;
        return half * m * m;
    };
    return LinkGains(g(1, 1), g(1, 2), g(2, 1), g(2, 2));
}

double db_to_linear(double x_db)
{
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x)
{
    if (!(x > 0.0))
        fail("linear_to_db needs a positive argument");
    return 10.0 * std::log10(x);
}

} // namespace ncrs
