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

#ifndef NCRS_REGION_HPP
#define NCRS_REGION_HPP

// Two-dimensional rate-region geometry. A region is described by its Pareto
// frontier; a convexified frontier is the upper-right boundary of the convex
// hull of the achievable points (time sharing) and always runs from the R2
// axis intercept to the R1 axis intercept.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncrs {

/// Rate pair in bits/s/Hz.
struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;

    friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

class Frontier {
public:
    /// Validates ordering (r1 non-decreasing, r2 non-increasing, no repeated
    /// vertices) and that all rates are finite and non-negative.
    Frontier(std::vector<RatePoint> points, bool convexified);

    const std::vector<RatePoint>& points() const noexcept { return points_; }
    bool convexified() const noexcept { return convexified_; }
    std::size_t size() const noexcept { return points_.size(); }

    double max_r1() const noexcept;
    double max_r2() const noexcept;

    /// Boundary height at abscissa r1: linear between vertices, the upper
    /// value on a vertical segment, 0 beyond the last vertex.
    double value_at(double r1) const;

    friend bool operator==(const Frontier&, const Frontier&) = default;

private:
    std::vector<RatePoint> points_;
    bool convexified_;
};

/// Drops dominated points and exact duplicates; result sorted by r1.
Frontier pareto_filter(std::span<const RatePoint> points);

/// Upper concave hull including the axis intercepts (max r1, 0) and (0, max r2).
Frontier upper_hull(const Frontier& f);
Frontier upper_hull(std::span<const RatePoint> points);

struct Containment {
    bool holds = true;
    /// Smallest d >= 0 such that every inner vertex p is dominated by some
    /// outer boundary point q with q >= p - d in both coordinates.
    double worst_violation = 0.0;
    RatePoint worst_point;
};

/// Returns a region point maximizing mu*r1 + (1-mu)*r2. `left` and `right`
/// are the hull vertices of the edge whose normal is mu, as a search hint.
using SupportOracle = std::function<RatePoint(double mu, const RatePoint& left, const RatePoint& right)>;

/// Hull of `points`, refined with support points: for every hull edge the
/// oracle is queried along the edge normal, and its answer is added when it
/// lies more than `tol` beyond the edge. Repeats until no edge improves or
/// `max_added` points were added. Added points are appended to `points`.
Frontier refine_upper_hull(std::vector<RatePoint>& points, const SupportOracle& support, double tol,
                           std::size_t max_added = 1u << 14);

Containment contains(const Frontier& outer, const Frontier& inner, double eps);
/// Same test for a raw point set against a convexified outer frontier.
Containment contains(const Frontier& outer, std::span<const RatePoint> inner, double eps);

/// `R1,R2` header, ascending R1, six decimals, locale independent.
std::string to_csv(const Frontier& f);
/// Parses what to_csv writes; the result is marked convexified when its
/// slopes are non-increasing within 1e-6.
Frontier from_csv(std::string_view text);

void write_csv(const Frontier& f, const std::string& path);
Frontier read_csv(const std::string& path);

} // namespace ncrs

#endif
