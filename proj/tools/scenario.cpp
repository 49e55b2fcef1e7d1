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

#include "scenario.hpp"

#include "ncrs/capi.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace cli {

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw UsageError(kExitInvalidConfig, what);
}

double to_real(const std::string& key, const std::string& text)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        invalid("`" + key + "`: not a finite number: '" + text + "'");
    return v;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& text)
{
    Int v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        invalid("`" + key + "`: not an integer: '" + text + "'");
    return v;
}

const std::array<const char*, 4> kLinks = {"11", "12", "21", "22"};

} // namespace

std::optional<std::string> canonical_baseline(const std::string& name)
{
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(n.begin(), n.end(), '-', '_');
    static const std::set<std::string> known = {"dpc", "dpc_pac", "miso", "miso_pac", "sc", "fdm", "hk_sym"};
    if (known.count(n))
        return n;
    return std::nullopt;
}

bool needs_phases(const std::string& scheme)
{
    return scheme == "dpc" || scheme == "dpc_pac" || scheme == "miso" || scheme == "miso_pac";
}

Scenario parse_scenario(const std::string& text)
{
    std::istringstream in(text);
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_config(in);
    } catch (const CLI::Error& e) {
        invalid(std::string("config syntax: ") + e.what());
    }

    std::map<std::string, std::vector<std::string>> kv;
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--")
            continue;   // section markers
        std::string key;
        for (const auto& p : item.parents)
            key += p + ".";
        key += item.name;
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
        if (!kv.emplace(key, item.inputs).second)
            invalid("duplicate key `" + key + "`");
    }

    for (const auto& [key, _] : kv) {
        bool known = key == "power_total" || key == "units" || key == "baselines" ||
                     key.rfind("grid.", 0) == 0 || key.rfind("optimizer.", 0) == 0;
        for (const char* link : kLinks) {
            const std::string l(link);
            for (const std::string& k : {"channel.g" + l, "channel.g" + l + "_db", "channel.h" + l + "_mag",
                                        "channel.h" + l + "_phase_deg"})
                known = known || key == k;
        }
        if (!known)
            invalid("unknown key `" + key + "`");
    }

    std::set<std::string> used;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        used.insert(key);
        if (it->second.size() != 1)
            invalid("`" + key + "` expects a single value");
        return it->second.front();
    };

    Scenario s;
    if (auto v = take("power_total"))
        s.power_total = to_real("power_total", *v);
    if (!(s.power_total > 0.0))
        invalid("power_total must be positive");

    bool linear = false;
    if (auto v = take("units")) {
        if (*v == "linear")
            linear = true;
        else if (*v != "db")
            invalid("units must be `db` or `linear`, got '" + *v + "'");
    }

    std::array<std::optional<double>, 4> g;
    std::array<std::optional<double>, 4> mag, phase;
    for (int k = 0; k < 4; ++k) {
        const std::string base = std::string("channel.g") + kLinks[k];
        const auto plain = take(base);
        const auto db = take(base + "_db");
        if (plain && db)
            invalid("both `" + base + "` and `" + base + "_db` given");
        if (plain) {
            const double x = to_real(base, *plain);
            g[k] = linear ? x : ncrs_db_to_linear(x);
        } else if (db) {
            g[k] = ncrs_db_to_linear(to_real(base + "_db", *db));
        }
        if (g[k] && !(*g[k] >= 0.0))
            invalid("`" + base + "` must be nonnegative (linear)");

        const std::string h = std::string("channel.h") + kLinks[k];
        if (auto v = take(h + "_mag"))
            mag[k] = to_real(h + "_mag", *v);
        if (auto v = take(h + "_phase_deg"))
            phase[k] = to_real(h + "_phase_deg", *v) * std::numbers::pi / 180.0;
        if (mag[k] && *mag[k] < 0.0)
            invalid("`" + h + "_mag` must be nonnegative");
    }

    const auto count = [](const auto& arr) {
        return std::count_if(arr.begin(), arr.end(), [](const auto& o) { return o.has_value(); });
    };
    const auto n_gains = count(g), n_mag = count(mag), n_phase = count(phase);
    if (n_gains > 0 && (n_mag > 0 || n_phase > 0))
        invalid("channel given both as gains and as taps; use exactly one representation");
    if (n_gains > 0) {
        if (n_gains != 4)
            invalid("all four gains channel.g11 .. channel.g22 are required");
        s.gains = std::array<double, 4>{*g[0], *g[1], *g[2], *g[3]};
    } else if (n_mag > 0 || n_phase > 0) {
        if (n_mag != 4 || n_phase != 4)
            invalid("taps need channel.hXY_mag and channel.hXY_phase_deg for all four links");
        Taps t;
        for (int k = 0; k < 4; ++k) {
            t.magnitude[k] = *mag[k];
            // wrap to [0, 2pi)
            double p = std::fmod(*phase[k], 2.0 * std::numbers::pi);
            t.phase_rad[k] = p < 0.0 ? p + 2.0 * std::numbers::pi : p;
        }
        s.taps = t;
    } else {
        invalid("no channel given (channel.gXY or channel.hXY_mag / channel.hXY_phase_deg)");
    }

    auto grid = [&](const char* key, int& out) {
        if (auto v = take(key)) {
            out = to_integer<int>(key, *v);
            if (out < 2)
                invalid(std::string("`") + key + "` must be at least 2");
        }
    };
    grid("grid.ncrs", s.ncrs_grid);
    grid("grid.sc", s.sc_grid);
    grid("grid.fdm", s.fdm_grid);
    grid("grid.dpc", s.dpc_grid);
    if (auto v = take("grid.refine_tol")) {
        s.refine_tol = to_real("grid.refine_tol", *v);
        if (s.refine_tol < 0.0)
            invalid("grid.refine_tol must be nonnegative");
    }

    if (auto v = take("optimizer.starts"))
        s.starts = to_integer<int>("optimizer.starts", *v);
    if (auto v = take("optimizer.max_iterations"))
        s.max_iterations = to_integer<int>("optimizer.max_iterations", *v);
    if (auto v = take("optimizer.tolerance"))
        s.tolerance = to_real("optimizer.tolerance", *v);
    if (auto v = take("optimizer.seed"))
        s.seed = to_integer<std::uint64_t>("optimizer.seed", *v);
    if (auto v = take("optimizer.weights"))
        s.weights = to_integer<int>("optimizer.weights", *v);
    if (s.starts < 1 || s.max_iterations < 1 || !(s.tolerance > 0.0) || s.weights < 2)
        invalid("optimizer needs starts >= 1, max_iterations >= 1, tolerance > 0, weights >= 2");

    if (const auto it = kv.find("baselines"); it != kv.end()) {
        used.insert("baselines");
        for (const auto& raw : it->second) {
            std::string name = raw;
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty())
                continue;
            const auto c = canonical_baseline(name);
            if (!c)
                invalid("unknown baseline '" + name + "'");
            if (*c == "hk_sym")
                invalid("hk_sym is a symmetric sum-rate curve, not a region; use the `symmetric` command");
            if (std::find(s.baselines.begin(), s.baselines.end(), *c) == s.baselines.end())
                s.baselines.push_back(*c);
        }
    }

    for (const auto& [key, _] : kv)
        if (!used.count(key))
            invalid("unknown key `" + key + "`");   // e.g. grid.bogus
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        invalid("cannot open config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

} // namespace cli
