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

#ifndef NCRS_NCRS_HPP
#define NCRS_NCRS_HPP

// Non-coherent rate splitting. Antenna i sends user i's private message with
// power fraction lambda_i and its share of a common message, decoded first by
// both receivers, with fraction 1 - lambda_i. alpha is user 1's share of the
// common rate. Nothing here depends on channel phases.

#include "ncrs/channel.hpp"
#include "ncrs/optimize.hpp"
#include "ncrs/region.hpp"

#include <span>
#include <vector>

namespace ncrs {

struct SplitParams {
    SplitParams(double lambda1_, double lambda2_, double alpha_);

    double lambda1;
    double lambda2;
    double alpha;
};

/// Rates in bits/s/Hz.
struct NcrsRates {
    double r1p = 0.0;
    double r2p = 0.0;
    double rc = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
};

NcrsRates ncrs_rates(const LinkGains& g, const SplitParams& s);

inline constexpr int kDefaultFrontierGrid = 101;
inline constexpr double kDefaultRefineTolerance = 5e-7;

/// Frontier vertices together with the split parameters that achieve (or,
/// for the axis intercepts, dominate) each of them.
struct NcrsFrontier {
    Frontier frontier;
    std::vector<SplitParams> generators;
};

/// Convex hull of the NCRS region. The (lambda1, lambda2) grid supplies the
/// alpha in {0, 1} endpoints of every rate segment; hull edges are then
/// refined by exact support-point searches until no edge is more than
/// `refine_tol` bits below the region in its normal direction.
/// refine_tol <= 0 disables the refinement (grid hull only).
NcrsFrontier ncrs_frontier_detailed(const LinkGains& g, int grid_steps = kDefaultFrontierGrid,
                                    double refine_tol = kDefaultRefineTolerance);

Frontier ncrs_frontier(const LinkGains& g, int grid_steps = kDefaultFrontierGrid,
                       double refine_tol = kDefaultRefineTolerance);

/// Best mu*R1 + (1-mu)*R2 over (lambda1, lambda2); alpha is 1 for mu > 1/2,
/// 0 for mu < 1/2, and at mu = 1/2 (where the objective ignores alpha) the
/// value that balances R1 and R2 as closely as possible.
struct NcrsWeightedMax {
    SplitParams params;
    NcrsRates rates;
    double objective;
};

NcrsWeightedMax ncrs_weighted_max(const LinkGains& g, double mu, int grid_steps,
                                  const OptimizerOptions& opts);

/// Sum rate Rc + 2Rp of the symmetric channel with lambda1 = lambda2 = lambda.
double symmetric_sum_rate(const SymmetricGains& sg, double lambda);

/// Maximizer of symmetric_sum_rate: (snr-inr)/(inr(snr+inr)) clamped to 1
/// when snr > inr; 0 (all common) when snr <= inr; 1 when inr = 0.
double optimal_lambda_symmetric(const SymmetricGains& sg);

struct SweepRow {
    double ratio = 0.0;   // log(inr) / log(snr)
    double sum_rate = 0.0;
    double sum_rate_over_awgn = 0.0;   // normalized by 2 log2(1 + snr)
    double lambda_star = 0.0;
};

/// inr = snr^ratio for every ratio in [0, 1.25]. Requires snr > 1.
std::vector<SweepRow> symmetric_sweep(double snr, std::span<const double> ratio_grid);

} // namespace ncrs

#endif
