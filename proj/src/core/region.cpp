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

#include "ncrs/region.hpp"
#include "ncrs/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <array>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace ncrs {

namespace {

constexpr double kMergeDistance = 1e-12;
// relative to the squared extent; loose enough for six-decimal CSV rounding
constexpr double kConcavityTolerance = 2e-6;

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b)
{
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool near(const RatePoint& a, const RatePoint& b)
{
    return std::abs(a.r1 - b.r1) <= kMergeDistance && std::abs(a.r2 - b.r2) <= kMergeDistance;
}

void check_point(const RatePoint& p)
{
    if (!std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r1 < 0.0 || p.r2 < 0.0)
        fail("rate points must be finite and non-negative");
}

// Concavity up to `tol` times the squared extent of the polygon.
bool concave_within(const std::vector<RatePoint>& pts, double tol)
{
    if (pts.size() < 3)
        return true;
    const double extent = std::max(pts.back().r1, pts.front().r2);
    const double limit = tol * std::max(extent * extent, 1.0);
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (cross(pts[i - 2], pts[i - 1], pts[i]) > limit)
            return false;
    return true;
}

} // namespace

Frontier::Frontier(std::vector<RatePoint> points, bool convexified)
    : points_(std::move(points)), convexified_(convexified)
{
    if (points_.empty())
        fail("a frontier needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        check_point(points_[i]);
        if (i == 0)
            continue;
        const auto& prev = points_[i - 1];
        const auto& cur = points_[i];
        if (cur.r1 < prev.r1 || cur.r2 > prev.r2 || cur == prev)
            fail("frontier points must have r1 non-decreasing, r2 non-increasing and be distinct");
    }
    if (convexified_) {
        if (points_.front().r1 != 0.0 || points_.back().r2 != 0.0)
            fail("a convexified frontier must start on the R2 axis and end on the R1 axis");
        if (!concave_within(points_, kConcavityTolerance))
            fail("a convexified frontier must have non-increasing slopes");
    }
}

double Frontier::max_r1() const noexcept
{
    return points_.back().r1;
}

double Frontier::max_r2() const noexcept
{
    return points_.front().r2;
}

double Frontier::value_at(double r1) const
{
    if (r1 <= points_.front().r1)
        return points_.front().r2;
    if (r1 > points_.back().r1)
        return 0.0;
    auto it = std::lower_bound(points_.begin(), points_.end(), r1,
                               [](const RatePoint& p, double x) { return p.r1 < x; });
    if (it->r1 == r1)
        return it->r2;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (r1 - lo.r1) / (hi.r1 - lo.r1);
    return lo.r2 + t * (hi.r2 - lo.r2);
}

Frontier pareto_filter(std::span<const RatePoint> points)
{
    if (points.empty())
        fail("pareto_filter needs at least one point");
    std::vector<RatePoint> sorted(points.begin(), points.end());
    for (const auto& p : sorted)
        check_point(p);
    // by r1 descending, ties by r2 descending; a point survives iff its r2
    // beats everything with larger or equal r1
    std::sort(sorted.begin(), sorted.end(), [](const RatePoint& a, const RatePoint& b) {
        return a.r1 != b.r1 ? a.r1 > b.r1 : a.r2 > b.r2;
    });
    std::vector<RatePoint> kept;
    double best_r2 = -1.0;
    for (const auto& p : sorted) {
        if (p.r2 > best_r2) {
            kept.push_back(p);
            best_r2 = p.r2;
        }
    }
    std::reverse(kept.begin(), kept.end());
    return Frontier(std::move(kept), false);
}

Frontier upper_hull(std::span<const RatePoint> points)
{
    const Frontier pareto = pareto_filter(points);

    std::vector<RatePoint> chain;
    chain.reserve(pareto.size() + 2);
    if (pareto.points().front().r1 > 0.0)
        chain.push_back({0.0, pareto.max_r2()});
    for (const auto& p : pareto.points())
        if (chain.empty() || !near(chain.back(), p))
            chain.push_back(p);
    if (chain.back().r2 > 0.0)
        chain.push_back({chain.back().r1, 0.0});

    std::vector<RatePoint> hull;
    hull.reserve(chain.size());
    for (const auto& p : chain) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }
    return Frontier(std::move(hull), true);
}

Frontier upper_hull(const Frontier& f)
{
    return upper_hull(std::span<const RatePoint>(f.points()));
}

Frontier refine_upper_hull(std::vector<RatePoint>& points, const SupportOracle& support, double tol,
                           std::size_t max_added)
{
    if (!(tol > 0.0))
        fail("hull refinement tolerance must be positive");
    Frontier hull = upper_hull(points);
    std::size_t added = 0;
    // edges already found tight; they stay tight while both vertices remain
    std::set<std::array<double, 4>> tight;
    for (int round = 0; round < 64 && added < max_added; ++round) {
        const auto& v = hull.points();
        std::size_t added_this_round = 0;
        for (std::size_t i = 1; i < v.size() && added < max_added; ++i) {
            const std::array<double, 4> edge{v[i - 1].r1, v[i - 1].r2, v[i].r1, v[i].r2};
            if (tight.contains(edge))
                continue;
            const double d1 = v[i].r1 - v[i - 1].r1;
            const double d2 = v[i - 1].r2 - v[i].r2;
            if (d1 + d2 <= 0.0)
                continue;
            const double mu = d2 / (d1 + d2);
            const RatePoint s = support(mu, v[i - 1], v[i]);
            const double gap = mu * (s.r1 - v[i - 1].r1) + (1.0 - mu) * (s.r2 - v[i - 1].r2);
            if (gap > tol) {
                points.push_back(s);
                ++added;
                ++added_this_round;
            } else {
                tight.insert(edge);
            }
        }
        if (added_this_round == 0)
            break;
        hull = upper_hull(points);
    }
    return hull;
}

Containment contains(const Frontier& outer, const Frontier& inner, double eps)
{
    if (!inner.convexified())
        fail("contains needs convexified frontiers");
    return contains(outer, std::span<const RatePoint>(inner.points()), eps);
}

Containment contains(const Frontier& outer, std::span<const RatePoint> inner, double eps)
{
    if (!outer.convexified())
        fail("contains needs a convexified outer frontier");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        fail("containment tolerance must be non-negative");

    const double r1_end = outer.max_r1();
    // Height of the outer region reachable with first coordinate >= x.
    auto reach = [&](double x) {
        if (x > r1_end)
            return -std::numeric_limits<double>::infinity();
        return outer.value_at(std::max(x, 0.0));
    };

    Containment result;
    for (const auto& p : inner) {
        check_point(p);
        // shortfall(d) = p.r2 - d - reach(p.r1 - d) is non-increasing in d
        auto covered = [&](double d) { return reach(p.r1 - d) >= p.r2 - d; };
        double d = 0.0;
        if (!covered(0.0)) {
            double lo = 0.0;
            double hi = std::max(p.r1, p.r2) + 1.0;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                (covered(mid) ? hi : lo) = mid;
            }
            d = hi;
        }
        if (d > result.worst_violation) {
            result.worst_violation = d;
            result.worst_point = p;
        }
    }
    result.holds = result.worst_violation <= eps;
    return result;
}

std::string to_csv(const Frontier& f)
{
    std::string out = "R1,R2\n";
    char buf[64];
    for (const auto& p : f.points()) {
        auto res = std::to_chars(buf, buf + sizeof(buf), p.r1, std::chars_format::fixed, 6);
        out.append(buf, res.ptr);
        out.push_back(',');
        res = std::to_chars(buf, buf + sizeof(buf), p.r2, std::chars_format::fixed, 6);
        out.append(buf, res.ptr);
        out.push_back('\n');
    }
    return out;
}

Frontier from_csv(std::string_view text)
{
    auto parse_error = [](const std::string& what) -> Error {
        return Error(ErrorCode::parse, "frontier CSV: " + what);
    };

    std::vector<RatePoint> pts;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line_no == 1) {
            if (line != "R1,R2")
                throw parse_error("missing `R1,R2` header");
            continue;
        }
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw parse_error("line " + std::to_string(line_no) + " has no comma");
        RatePoint p;
        auto parse = [&](std::string_view field, double& v) {
            auto res = std::from_chars(field.data(), field.data() + field.size(), v);
            if (res.ec != std::errc() || res.ptr != field.data() + field.size())
                throw parse_error("bad number on line " + std::to_string(line_no));
        };
        parse(line.substr(0, comma), p.r1);
        parse(line.substr(comma + 1), p.r2);
        if (!pts.empty() && pts.back() == p)
            continue;
        pts.push_back(p);
    }
    if (pts.empty())
        throw parse_error("no data rows");

    try {
        const bool hull_like = pts.front().r1 == 0.0 && pts.back().r2 == 0.0 && concave_within(pts, kConcavityTolerance);
        return Frontier(std::move(pts), hull_like);
    } catch (const Error& e) {
        throw parse_error(e.what());
    }
}

void write_csv(const Frontier& f, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::io, "cannot open " + path + " for writing");
    out << to_csv(f);
    if (!out)
        throw Error(ErrorCode::io, "failed writing " + path);
}

Frontier read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_csv(ss.str());
}

} // namespace ncrs
