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

#ifndef NCRS_CHANNEL_HPP
#define NCRS_CHANNEL_HPP

// Two-user, two-antenna channel descriptions. Row i of the channel is what
// receiver i sees, column j is transmit antenna j.

#include <complex>

namespace ncrs {

/// Total transmit power P. Each of the two antennas is limited to P/2.
class PowerBudget {
public:
    explicit PowerBudget(double total);

    double total() const noexcept { return total_; }
    double per_antenna() const noexcept { return total_ / 2.0; }

private:
    double total_;
};

/// Link qualities gamma_ij = (P/2)|h_ij|^2, linear scale. This is all the
/// transmitter knows under magnitude-only CSIT.
class LinkGains {
public:
    LinkGains(double g11, double g12, double g21, double g22);

    double g11() const noexcept { return g11_; }
    double g12() const noexcept { return g12_; }
    double g21() const noexcept { return g21_; }
    double g22() const noexcept { return g22_; }

    // direct links are the snr's, cross links the inr's
    double snr1() const noexcept { return g11_; }
    double snr2() const noexcept { return g22_; }
    double inr1() const noexcept { return g12_; }
    double inr2() const noexcept { return g21_; }

    /// Gain of row `user` (1 or 2) from antenna `antenna` (1 or 2).
    double at(int user, int antenna) const;

    /// Same channel with the user labels exchanged.
    LinkGains swapped_users() const noexcept { return LinkGains(g22_, g21_, g12_, g11_); }

    friend bool operator==(const LinkGains&, const LinkGains&) = default;

private:
    double g11_, g12_, g21_, g22_;
};

/// One complex channel tap stored in polar form.
struct Tap {
    double magnitude = 0.0;
    double phase = 0.0;   // radians, [0, 2pi)

    std::complex<double> value() const { return std::polar(magnitude, phase); }
};

/// Full 2x2 channel matrix. Only the full-CSIT baselines may look at phases.
class ComplexChannel {
public:
    ComplexChannel(Tap h11, Tap h12, Tap h21, Tap h22);

    /// Builds a channel from complex coefficients.
    static ComplexChannel from_values(std::complex<double> h11, std::complex<double> h12,
                                      std::complex<double> h21, std::complex<double> h22);

    const Tap& tap(int user, int antenna) const;
    std::complex<double> h(int user, int antenna) const { return tap(user, antenna).value(); }

private:
    Tap taps_[4];
};

struct SymmetricGains {
    SymmetricGains(double snr_, double inr_);

    double snr;
    double inr;
};

LinkGains gains_from_channel(const ComplexChannel& ch, const PowerBudget& p);

double db_to_linear(double x_db);
/// Throws for x <= 0.
double linear_to_db(double x);

} // namespace ncrs

#endif
