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

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;   // room for the legend
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

/// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

std::vector<double> ticks(double lo, double hi, double step)
{
    std::vector<double> t;
    for (long k = static_cast<long>(std::ceil(lo / step - 1e-9)); k * step <= hi + 1e-9 * step; ++k)
        t.push_back(k * step);
    return t;
}

void fit_range(double& lo, double& hi, bool x_axis, const Chart& c)
{
    if (lo != hi)
        return;
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (const auto& s : c.series)
        for (const auto& [x, y] : s.points) {
            const double v = x_axis ? x : y;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!std::isfinite(lo)) {
        lo = 0.0;
        hi = 1.0;
    }
    lo = std::min(lo, 0.0);
    if (hi <= lo)
        hi = lo + 1.0;
    hi += 0.05 * (hi - lo);
}

} // namespace

std::string fixed(double value, int decimals)
{
    if (value == 0.0)
        value = 0.0;   // drop the sign of -0
    std::array<char, 64> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
    return std::string(buf.data(), r.ptr);
}

std::string render_svg(const Chart& chart)
{
    double x_lo = chart.x_lo, x_hi = chart.x_hi, y_lo = chart.y_lo, y_hi = chart.y_hi;
    fit_range(x_lo, x_hi, true, chart);
    fit_range(y_lo, y_hi, false, chart);

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - y_lo) / (y_hi - y_lo) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0) << "\" height=\""
      << fixed(kHeight, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' ' << fixed(kHeight, 0)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(kLeft + pw / 2, 1) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(chart.title) << "</text>\n";

    // grid and ticks
    const double xs = nice_step(x_hi - x_lo, 6), ys = nice_step(y_hi - y_lo, 6);
    const int xdec = std::max(0, -static_cast<int>(std::floor(std::log10(xs))));
    const int ydec = std::max(0, -static_cast<int>(std::floor(std::log10(ys))));
    o << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (const double t : ticks(x_lo, x_hi, xs))
        o << "<line x1=\"" << fixed(px(t), 2) << "\" y1=\"" << fixed(kTop, 2) << "\" x2=\"" << fixed(px(t), 2)
          << "\" y2=\"" << fixed(kTop + ph, 2) << "\"/>\n";
    for (const double t : ticks(y_lo, y_hi, ys))
        o << "<line x1=\"" << fixed(kLeft, 2) << "\" y1=\"" << fixed(py(t), 2) << "\" x2=\"" << fixed(kLeft + pw, 2)
          << "\" y2=\"" << fixed(py(t), 2) << "\"/>\n";
    o << "</g>\n<g fill=\"#333333\">\n";
    for (const double t : ticks(x_lo, x_hi, xs))
        o << "<text x=\"" << fixed(px(t), 2) << "\" y=\"" << fixed(kTop + ph + 16, 2)
          << "\" text-anchor=\"middle\">" << fixed(t, xdec) << "</text>\n";
    for (const double t : ticks(y_lo, y_hi, ys))
        o << "<text x=\"" << fixed(kLeft - 6, 2) << "\" y=\"" << fixed(py(t) + 4, 2) << "\" text-anchor=\"end\">"
          << fixed(t, ydec) << "</text>\n";
    o << "</g>\n";

    o << "<rect x=\"" << fixed(kLeft, 2) << "\" y=\"" << fixed(kTop, 2) << "\" width=\"" << fixed(pw, 2)
      << "\" height=\"" << fixed(ph, 2) << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << fixed(kLeft + pw / 2, 2) << "\" y=\"" << fixed(kHeight - 14, 2)
      << "\" text-anchor=\"middle\">" << escape(chart.x_label) << "</text>\n"
      << "<text transform=\"translate(18," << fixed(kTop + ph / 2, 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(chart.y_label) << "</text>\n";

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const Series& s = chart.series[k];
        const char* color = kPalette[k % kPalette.size()];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (s.dashed)
            o << " stroke-dasharray=\"6 4\"";
        o << " points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i)
            o << (i ? " " : "") << fixed(px(s.points[i].first), 2) << ',' << fixed(py(s.points[i].second), 2);
        o << "\"/>\n";

        const double ly = kTop + 14 + 20.0 * static_cast<double>(k);
        const double lx = kLeft + pw + 16;
        o << "<line x1=\"" << fixed(lx, 2) << "\" y1=\"" << fixed(ly, 2) << "\" x2=\"" << fixed(lx + 24, 2)
          << "\" y2=\"" << fixed(ly, 2) << "\" stroke=\"" << color << "\" stroke-width=\"2\""
          << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n"
          << "<text x=\"" << fixed(lx + 30, 2) << "\" y=\"" << fixed(ly + 4, 2) << "\">" << escape(s.name)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace cli
