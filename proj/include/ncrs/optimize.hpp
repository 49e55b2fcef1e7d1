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

#ifndef NCRS_OPTIMIZE_HPP
#define NCRS_OPTIMIZE_HPP

#include "ncrs/region.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace ncrs {

struct OptimizerOptions {
    int starts = 16;
    int max_iterations = 5000;
    double tolerance = 1e-7;
    std::uint64_t seed = 20190417;

    void validate() const;
};

struct ScalarMax {
    double x = 0.0;
    double value = 0.0;
};

inline constexpr double kGoldenTolerance = 1e-9;

/// Golden-section search for a maximum on [lo, hi]. Exact for unimodal f,
/// a local maximum otherwise. The endpoints are also compared so that a
/// monotone f returns its boundary maximum.
ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double tol = kGoldenTolerance);

/// Scans `grid_steps` equispaced points, then golden-refines the bracket
/// around the best one. Never returns less than the best grid value.
ScalarMax grid_refine_max(const std::function<double(double)>& f, double lo, double hi,
                          int grid_steps, double tol = kGoldenTolerance);

/// Objective over a box of parameters.
using BoxObjective = std::function<double(std::span<const double>)>;

/// Maximizes over the box [lo, hi] (per coordinate) by nested golden searches:
/// the outer coordinate is searched over the profile maximum of the inner
/// ones. Handles ridges (e.g. a min of two smooth terms) that stall plain
/// coordinate ascent. Cost grows geometrically with the dimension, so keep
/// boxes small (<= 3 coordinates).
std::vector<double> profile_golden_max(const BoxObjective& f, std::span<const double> lo,
                                       std::span<const double> hi, double tol = kGoldenTolerance);

/// Maps a parameter vector in [0,1]^dims to a rate pair.
using RateEvaluator = std::function<RatePoint(std::span<const double>)>;

struct WeightedMax {
    std::vector<double> params;
    RatePoint point;
    double objective = 0.0;
};

/// Maximizes mu*r1 + (1-mu)*r2 over [0,1]^dims: a full grid scan with
/// grid_steps points per axis, then a profile refinement inside the grid
/// cell around the best point. Grid ties go to the first point in scan order.
WeightedMax weighted_rate_max(const RateEvaluator& evaluator, std::size_t dims, double mu,
                              int grid_steps, const OptimizerOptions& opts);

/// Deterministic source of start points. The engine and the integer to real
/// conversion are both fully specified, so draws reproduce across platforms.
class StartSampler {
public:
    explicit StartSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// One coordinate of a box for coordinate ascent.
struct Coordinate {
    double lo = 0.0;
    double hi = 1.0;
    bool periodic = false;   // hi wraps to lo (e.g. a phase)
};

struct AscentResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    int start_index = 0;
};

/// Multi-start coordinate ascent. Each sweep line-searches every coordinate
/// over its whole range (coarse scan + golden refinement), keeping the
/// current value if nothing better is found. A start converges when a sweep
/// improves the objective by less than opts.tolerance. The best start wins;
/// ties go to the lowest start index. Extra fixed starts may be supplied and
/// are tried before the random ones.
AscentResult coordinate_ascent_max(const BoxObjective& f, std::span<const Coordinate> box,
                                   const OptimizerOptions& opts,
                                   std::span<const std::vector<double>> fixed_starts = {});

} // namespace ncrs

#endif
