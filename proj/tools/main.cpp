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

// ncrs command-line front end. Talks to the library through the C API only.

#include "scenario.hpp"
#include "svg.hpp"

#include "ncrs/capi.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

using cli::UsageError;

struct ChannelDeleter {
    void operator()(ncrs_channel* c) const { ncrs_channel_free(c); }
};
struct FrontierDeleter {
    void operator()(ncrs_frontier* f) const { ncrs_frontier_free(f); }
};
using ChannelPtr = std::unique_ptr<ncrs_channel, ChannelDeleter>;
using FrontierPtr = std::unique_ptr<ncrs_frontier, FrontierDeleter>;

// sandwich order, innermost first
const std::vector<std::string> kSandwich = {"sc", "ncrs", "dpc_pac", "dpc"};

const std::map<std::string, ncrs_scheme> kSchemes = {
    {"ncrs", NCRS_SCHEME_NCRS}, {"dpc", NCRS_SCHEME_DPC},           {"dpc_pac", NCRS_SCHEME_DPC_PAC},
    {"miso", NCRS_SCHEME_MISO}, {"miso_pac", NCRS_SCHEME_MISO_PAC}, {"sc", NCRS_SCHEME_SC},
    {"fdm", NCRS_SCHEME_FDM},
};

const std::map<std::string, std::string> kLabels = {
    {"ncrs", "NCRS"}, {"dpc", "DPC"}, {"dpc_pac", "DPC-pac"}, {"miso", "MISO"},
    {"miso_pac", "MISO-pac"}, {"sc", "SC"}, {"fdm", "FDM"},
};

/// Maps a failed C API call to an exit code.
[[noreturn]] void api_failure(ncrs_status st, const std::string& context)
{
    const std::string msg = context + ": " + ncrs_status_string(st) + " (" + ncrs_last_error() + ")";
    switch (st) {
    case NCRS_INVALID_ARGUMENT:
    case NCRS_PARSE: throw UsageError(cli::kExitInvalidConfig, msg);
    case NCRS_MISSING_PHASE: throw UsageError(cli::kExitMissingPhase, msg);
    default: throw UsageError(1, msg);
    }
}

struct Options {
    std::string config;
    std::string out_dir = ".";
    std::optional<int> grid;
    double eps = 1e-3;
    std::optional<std::uint64_t> seed;
    double snr_db = 15.0;
    std::string ratio_range = "0:1:51";
};

struct Computed {
    std::string name;
    FrontierPtr frontier;
    bool converged = true;
    std::string csv_path;
};

ChannelPtr make_channel(const cli::Scenario& s)
{
    ncrs_channel* ch = nullptr;
    ncrs_status st;
    if (s.taps)
        st = ncrs_channel_from_taps(s.taps->magnitude.data(), s.taps->phase_rad.data(), s.power_total, &ch);
    else
        st = ncrs_channel_from_gains((*s.gains)[0], (*s.gains)[1], (*s.gains)[2], (*s.gains)[3], &ch);
    if (st != NCRS_OK)
        api_failure(st, "channel");
    return ChannelPtr(ch);
}

ncrs_solver_config solver_config(const cli::Scenario& s, ncrs_scheme scheme)
{
    ncrs_solver_config c;
    ncrs_solver_config_default(&c);
    c.grid_steps = scheme == NCRS_SCHEME_SC ? s.sc_grid : scheme == NCRS_SCHEME_FDM ? s.fdm_grid : s.ncrs_grid;
    c.dpc_grid_steps = s.dpc_grid;
    c.refine_tol = s.refine_tol;
    c.starts = s.starts;
    c.max_iterations = s.max_iterations;
    c.tolerance = s.tolerance;
    c.seed = s.seed;
    c.weight_count = s.weights;
    return c;
}

cli::Scenario scenario_from(const Options& o)
{
    cli::Scenario s = cli::load_scenario(o.config);
    if (o.grid) {
        if (*o.grid < 2)
            throw UsageError(cli::kExitInvalidConfig, "--grid must be at least 2");
        s.ncrs_grid = s.sc_grid = s.fdm_grid = s.dpc_grid = *o.grid;
    }
    if (o.seed)
        s.seed = *o.seed;
    return s;
}

void ensure_phases(const cli::Scenario& s, const std::vector<std::string>& schemes)
{
    if (s.taps)
        return;
    for (const auto& name : schemes)
        if (cli::needs_phases(name))
            throw UsageError(cli::kExitMissingPhase,
                             name + " needs full CSIT: give the channel as taps (channel.hXY_mag and "
                                    "channel.hXY_phase_deg), not as gains");
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw UsageError(1, "cannot write '" + path.string() + "'");
}

fs::path prepare_out_dir(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw UsageError(1, "cannot create output directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

std::vector<Computed> compute_all(const cli::Scenario& s, const std::vector<std::string>& schemes,
                                  const fs::path& dir)
{
    const ChannelPtr ch = make_channel(s);
    std::vector<Computed> out;
    for (const auto& name : schemes) {
        const ncrs_scheme scheme = kSchemes.at(name);
        const ncrs_solver_config cfg = solver_config(s, scheme);
        ncrs_frontier* f = nullptr;
        const ncrs_status st = ncrs_compute_frontier(ch.get(), scheme, &cfg, &f);
        if (st != NCRS_OK && st != NCRS_NOT_CONVERGED)
            api_failure(st, name);
        Computed c{name, FrontierPtr(f), st == NCRS_OK, (dir / (name + ".csv")).string()};
        if (const ncrs_status w = ncrs_frontier_write_csv(c.frontier.get(), c.csv_path.c_str()); w != NCRS_OK)
            api_failure(w, "writing " + c.csv_path);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::pair<double, double>> vertices(const ncrs_frontier* f)
{
    std::vector<std::pair<double, double>> v(ncrs_frontier_size(f));
    for (std::size_t k = 0; k < v.size(); ++k)
        ncrs_frontier_point(f, k, &v[k].first, &v[k].second);
    return v;
}

void write_region_svg(const std::vector<Computed>& computed, const fs::path& path)
{
    cli::Chart chart;
    chart.title = "Achievable rate regions";
    chart.x_label = "R1 [bps/Hz]";
    chart.y_label = "R2 [bps/Hz]";
    for (const auto& c : computed)
        chart.series.push_back({kLabels.at(c.name), vertices(c.frontier.get()), c.name != "ncrs"});
    write_text(path, cli::render_svg(chart));
}

json audit_entry(const Computed& outer, const Computed& inner, double eps)
{
    ncrs_containment r{};
    if (const ncrs_status st = ncrs_contains(outer.frontier.get(), inner.frontier.get(), eps, &r); st != NCRS_OK)
        api_failure(st, "containment " + inner.name + " in " + outer.name);
    json j;
    j["outer"] = outer.name;
    j["inner"] = inner.name;
    j["holds"] = r.holds != 0;
    j["worst_violation"] = r.worst_violation;
    return j;
}

/// Summary document; also returns whether every adjacent sandwich link holds.
json summarize(const std::vector<Computed>& computed, double eps, bool& sandwich_holds)
{
    json j;
    for (const auto& c : computed) {
        json e;
        e["csv_path"] = c.csv_path;
        e["points"] = ncrs_frontier_size(c.frontier.get());
        e["max_r1"] = ncrs_frontier_max_r1(c.frontier.get());
        e["max_r2"] = ncrs_frontier_max_r2(c.frontier.get());
        j[c.name] = e;
    }

    auto find = [&](const std::string& name) -> const Computed* {
        for (const auto& c : computed)
            if (c.name == name)
                return &c;
        return nullptr;
    };
    std::vector<const Computed*> chain;
    for (const auto& name : kSandwich)
        if (const Computed* c = find(name))
            chain.push_back(c);

    json audits = json::array();
    sandwich_holds = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t k = i + 1; k < chain.size(); ++k) {
            json a = audit_entry(*chain[k], *chain[i], eps);
            if (k == i + 1 && !a["holds"].get<bool>())
                sandwich_holds = false;
            audits.push_back(std::move(a));
        }
    }
    j["audits"] = std::move(audits);
    j["eps"] = eps;

    json flags;
    for (const auto& c : computed)
        flags[c.name] = c.converged;
    j["convergence_flags"] = std::move(flags);
    return j;
}

bool all_converged(const std::vector<Computed>& computed)
{
    for (const auto& c : computed)
        if (!c.converged)
            return false;
    return true;
}

void check_eps(double eps)
{
    if (!(eps >= 1e-6) || !std::isfinite(eps))
        throw UsageError(cli::kExitInvalidConfig, "--eps must be at least 1e-6 (frontiers are sampled)");
}

int cmd_region(const Options& o)
{
    check_eps(o.eps);
    const cli::Scenario s = scenario_from(o);
    std::vector<std::string> schemes = {"ncrs"};
    schemes.insert(schemes.end(), s.baselines.begin(), s.baselines.end());
    ensure_phases(s, schemes);

    const fs::path dir = prepare_out_dir(o.out_dir);
    const std::vector<Computed> computed = compute_all(s, schemes, dir);
    write_region_svg(computed, dir / "region.svg");
    bool sandwich = true;
    json summary = summarize(computed, o.eps, sandwich);
    write_text(dir / "summary.json", summary.dump(2) + "\n");

    for (const auto& c : computed)
        std::cout << c.name << ": " << ncrs_frontier_size(c.frontier.get()) << " vertices -> " << c.csv_path
                  << (c.converged ? "" : "  [not converged]") << "\n";
    if (!all_converged(computed)) {
        std::cerr << "ncrs: optimizer did not converge; results flagged in summary.json\n";
        return cli::kExitNotConverged;
    }
    return 0;
}

int cmd_audit(const Options& o)
{
    check_eps(o.eps);
    const cli::Scenario s = scenario_from(o);
    std::vector<std::string> schemes = kSandwich;
    for (const auto& b : s.baselines)
        if (std::find(schemes.begin(), schemes.end(), b) == schemes.end())
            schemes.push_back(b);
    ensure_phases(s, schemes);

    const fs::path dir = prepare_out_dir(o.out_dir);
    const std::vector<Computed> computed = compute_all(s, schemes, dir);
    bool sandwich = true;
    json report = summarize(computed, o.eps, sandwich);
    report["sandwich_holds"] = sandwich;
    write_text(dir / "audit.json", report.dump(2) + "\n");

    for (const auto& a : report["audits"])
        std::cout << a["inner"].get<std::string>() << " in " << a["outer"].get<std::string>() << ": "
                  << (a["holds"].get<bool>() ? "holds" : "VIOLATED") << " (worst "
                  << cli::fixed(a["worst_violation"].get<double>(), 6) << ")\n";
    if (!sandwich) {
        std::cerr << "ncrs: sandwich sc <= ncrs <= dpc_pac <= dpc violated at eps " << o.eps << "\n";
        return cli::kExitSandwichViolated;
    }
    if (!all_converged(computed)) {
        std::cerr << "ncrs: optimizer did not converge; results flagged in audit.json\n";
        return cli::kExitNotConverged;
    }
    return 0;
}

struct RatioRange {
    double lo;
    double hi;
    int steps;
};

RatioRange parse_range(const std::string& text)
{
    const auto bad = [&] {
        return UsageError(cli::kExitInvalidConfig,
                          "--ratio-range expects min:max:steps with 0 <= min < max <= 1.25 and steps >= 2, got '" +
                              text + "'");
    };
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos)
        throw bad();
    RatioRange r{};
    try {
        std::size_t used = 0;
        r.lo = std::stod(text.substr(0, a), &used);
        if (used != a)
            throw bad();
        r.hi = std::stod(text.substr(a + 1, b - a - 1), &used);
        if (used != b - a - 1)
            throw bad();
        r.steps = std::stoi(text.substr(b + 1), &used);
        if (used != text.size() - b - 1)
            throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    if (!(r.lo >= 0.0 && r.lo < r.hi && r.hi <= 1.25 && r.steps >= 2))
        throw bad();
    return r;
}

int cmd_symmetric(const Options& o)
{
    if (!(o.snr_db > 0.0) || !std::isfinite(o.snr_db))
        throw UsageError(cli::kExitInvalidConfig, "--snr-db must be positive");
    const RatioRange range = parse_range(o.ratio_range);
    const int hk_grid = o.grid.value_or(1001);
    if (hk_grid < 2)
        throw UsageError(cli::kExitInvalidConfig, "--grid must be at least 2");

    std::vector<double> ratios(range.steps);
    for (int k = 0; k < range.steps; ++k)
        ratios[k] = k + 1 == range.steps ? range.hi : range.lo + (range.hi - range.lo) * k / (range.steps - 1);
    std::vector<ncrs_sweep_row> rows(ratios.size());
    const double snr = ncrs_db_to_linear(o.snr_db);
    if (const ncrs_status st = ncrs_symmetric_sweep(snr, ratios.data(), ratios.size(), hk_grid, rows.data());
        st != NCRS_OK)
        api_failure(st, "symmetric sweep");

    const fs::path dir = prepare_out_dir(o.out_dir);
    std::string csv = "ratio,ncrs_sum_over_awgn,hk_sum_over_awgn,lambda_star\n";
    cli::Series ncrs{"NCRS", {}, false}, hk{"HK", {}, true}, lam{"NCRS lambda*", {}, false};
    for (const auto& r : rows) {
        csv += cli::fixed(r.ratio, 6) + "," + cli::fixed(r.ncrs_sum_over_awgn, 6) + "," +
               cli::fixed(r.hk_sum_over_awgn, 6) + "," + cli::fixed(r.lambda_star, 6) + "\n";
        ncrs.points.emplace_back(r.ratio, r.ncrs_sum_over_awgn);
        hk.points.emplace_back(r.ratio, r.hk_sum_over_awgn);
        lam.points.emplace_back(r.ratio, r.lambda_star);
    }
    write_text(dir / "symmetric.csv", csv);

    const std::string snr_label = "snr = " + cli::fixed(o.snr_db, 1) + " dB";
    cli::Chart sum{"Symmetric sum rate, " + snr_label, "log(inr) / log(snr)", "sum rate / 2 log2(1 + snr)",
                   {ncrs, hk}};
    sum.x_lo = range.lo;
    sum.x_hi = range.hi;
    sum.y_lo = 0.0;
    sum.y_hi = 1.05;
    write_text(dir / "symmetric_sum_rate.svg", cli::render_svg(sum));

    cli::Chart weight{"Private power fraction, " + snr_label, "log(inr) / log(snr)", "lambda*", {lam}};
    weight.x_lo = range.lo;
    weight.x_hi = range.hi;
    weight.y_lo = 0.0;
    weight.y_hi = 1.05;
    write_text(dir / "symmetric_lambda.svg", cli::render_svg(weight));

    std::cout << rows.size() << " rows -> " << (dir / "symmetric.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rate regions of non-coherent rate splitting and its baselines for the two-user MISO "
                 "broadcast channel"};
    app.set_version_flag("--version", std::string(ncrs_version()));
    app.require_subcommand(1);

    Options o;
    auto* region = app.add_subcommand("region", "Frontier CSVs, SVG overlay and summary.json for a scenario");
    auto* symmetric = app.add_subcommand("symmetric", "Symmetric sum-rate sweep of NCRS against HK");
    auto* audit = app.add_subcommand("audit", "Containment audit sc <= ncrs <= dpc_pac <= dpc");

    for (auto* sub : {region, audit}) {
        sub->add_option("--config", o.config, "Scenario file")->required();
        sub->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--grid", o.grid, "Grid steps for every frontier (overrides grid.*)");
        sub->add_option("--eps", o.eps, "Containment tolerance (>= 1e-6)")->capture_default_str();
        sub->add_option("--seed", o.seed, "Optimizer seed (overrides optimizer.seed)");
    }
    symmetric->add_option("--snr-db", o.snr_db, "Direct-link snr in dB")->capture_default_str();
    symmetric->add_option("--ratio-range", o.ratio_range, "min:max:steps of log(inr)/log(snr)")
        ->capture_default_str();
    symmetric->add_option("--grid", o.grid, "HK lambda grid steps (default 1001)");
    symmetric->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitInvalidConfig;
    }

    try {
        if (*region)
            return cmd_region(o);
        if (*audit)
            return cmd_audit(o);
        return cmd_symmetric(o);
    } catch (const UsageError& e) {
        std::cerr << "ncrs: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "ncrs: " << e.what() << "\n";
        return 1;
    }
}
