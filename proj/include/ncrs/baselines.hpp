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

#ifndef NCRS_BASELINES_HPP
#define NCRS_BASELINES_HPP

// Comparison schemes. SC, FDM and the symmetric HK bound only need link
// gains; MISO, MISO-pac, DPC and DPC-pac need the full complex channel.

#include "ncrs/channel.hpp"
#include "ncrs/optimize.hpp"
#include "ncrs/region.hpp"

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace ncrs {

enum class BaselineKind { dpc, dpc_pac, miso, miso_pac, sc, fdm, hk_sym };

std::string_view to_string(BaselineKind kind);
std::optional<BaselineKind> parse_baseline(std::string_view name);
bool requires_full_csit(BaselineKind kind);

/// Hermitian 2x2 transmit covariance [[a, c], [conj(c), b]].
struct Covariance2 {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> c;

    bool is_psd(double tol = 1e-12) const;
    /// h S h^H for the channel row h = (h_1, h_2).
    double quadratic_form(std::complex<double> h1, std::complex<double> h2) const;
};

/// Superposition coding with i.i.d. layers on both antennas: the users see
/// effective gains g_i1 + g_i2 and form a degraded scalar BC.
Frontier sc_frontier(const LinkGains& g, int grid_steps);

/// Orthogonal band shares t and 1-t; a user's share carries power boosted by
/// 1/t and non-coherent transmission from both antennas.
Frontier fdm_frontier(const LinkGains& g, int grid_steps);

/// Non-cooperative rate-splitting sum rate at a fixed private fraction.
double hk_symmetric_sum_rate_at(const SymmetricGains& sg, double lambda);
/// Maximum of hk_symmetric_sum_rate_at over a lambda grid, golden-refined.
double hk_symmetric_sum_rate(const SymmetricGains& sg, int grid_steps);

/// Single-user capacity with all power P on `user` (1 or 2) and maximum-ratio
/// transmission.
double miso_capacity(const ComplexChannel& ch, int user, const PowerBudget& p);
/// Same under the P/2 per-antenna limit: both antennas at full power, phases
/// aligned to the user's channel.
double miso_pac_capacity(const ComplexChannel& ch, int user, const PowerBudget& p);

/// Time sharing between the two single-user capacities.
Frontier miso_frontier(const ComplexChannel& ch, const PowerBudget& p);
Frontier miso_pac_frontier(const ComplexChannel& ch, const PowerBudget& p);

/// Sum-power DPC region through the dual MAC. Corner points of the dual MAC
/// pentagons on a grid of power splits q1 + q2 = P, plus exact weighted
/// sum-rate maximizers placed adaptively along the boundary.
Frontier dpc_frontier(const ComplexChannel& ch, const PowerBudget& p, int grid_steps);

/// Scalarization weights for DPC-type frontiers: `count` values of mu in
/// [0, 1], cosine-spaced so they cluster near both ends.
std::vector<double> scalarization_weights(int count = 65);

/// Encoding order for DPC. `first` is the user encoded first; it sees the
/// other user's signal as interference, the other user sees none.
struct DpcPacSolution {
    double mu = 0.0;
    int first = 1;
    Covariance2 s1;
    Covariance2 s2;
    RatePoint rates;
    double objective = 0.0;
    bool converged = false;
};

/// Rates of the given covariances and order. Does not check feasibility.
RatePoint dpc_rates(const ComplexChannel& ch, const Covariance2& s1, const Covariance2& s2,
                    int first);

/// Maximizes mu R1 + (1-mu) R2 for one encoding order subject to
/// diag(S1 + S2) <= (P/2, P/2), by multi-start coordinate ascent.
DpcPacSolution dpc_pac_weighted_max(const ComplexChannel& ch, const PowerBudget& p, double mu,
                                    int first, const OptimizerOptions& opts);

struct DpcPacResult {
    Frontier frontier;
    bool converged = true;
    std::vector<DpcPacSolution> solutions;
};

DpcPacResult dpc_pac_frontier(const ComplexChannel& ch, const PowerBudget& p,
                              const OptimizerOptions& opts, int weight_count = 65);

} // namespace ncrs

#endif
