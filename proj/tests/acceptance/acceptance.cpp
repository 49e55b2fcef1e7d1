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

// Acceptance suite. One line per criterion:
//
//   [PASS] 1 closed-form lambda*  ...details...  (0.41 s)
//
// Usage: acceptance [criterion ...]   (no arguments runs all eight)
// Exit status is nonzero when any selected criterion fails.

#include "ncrs/baselines.hpp"
#include "ncrs/channel.hpp"
#include "ncrs/ncrs.hpp"
#include "ncrs/region.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

using namespace ncrs;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double movement(const Frontier& a, const Frontier& b)
{
    return std::max(contains(a, b, 1e-12).worst_violation, contains(b, a, 1e-12).worst_violation);
}

bool same_bits(const Frontier& a, const Frontier& b)
{
    const auto& p = a.points();
    const auto& q = b.points();
    if (p.size() != q.size())
        return false;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k].r1 != q[k].r1 || p[k].r2 != q[k].r2)
            return false;
    return true;
}

// 1. lambda* against a 1e-4 grid argmax and a vanishing derivative.
Outcome closed_form_lambda()
{
    std::mt19937_64 rng(1001);
    int grid_misses = 0, slope_misses = 0, interior = 0;
    double worst_gap = 0.0, worst_slope = 0.0;
    for (int t = 0; t < 1000; ++t) {
        double snr = log_uniform(rng, 0.1, 1e4), inr = log_uniform(rng, 0.1, 1e4);
        if (snr < inr)
            std::swap(snr, inr);
        if (snr == inr) {
            --t;
            continue;
        }
        const double star = optimal_lambda_symmetric(SymmetricGains(snr, inr));
        const double gap = std::abs(oracle::sym_grid_argmax(snr, inr, 1e-4) - star);
        worst_gap = std::max(worst_gap, gap);
        grid_misses += gap > 2e-4;
        if (star > 0.0 && star < 1.0) {
            ++interior;
            const double slope = std::abs(oracle::sym_derivative(snr, inr, star));
            worst_slope = std::max(worst_slope, slope);
            slope_misses += !(slope < 1e-4);
        }
    }
    return {grid_misses == 0 && slope_misses == 0,
            "1000 pairs, " + std::to_string(interior) + " interior; worst |grid - lambda*| " +
                fmt("%.2e", worst_gap) + " (tol 2e-4), worst |dR/dlambda| " + fmt("%.2e", worst_slope) +
                " (tol 1e-4)"};
}

// 2. Symmetric sweep at 15 dB against HK.
Outcome symmetric_sweep_15db()
{
    const double snr = std::pow(10.0, 1.5);
    const double awgn = 2.0 * std::log2(1.0 + snr);
    std::vector<double> ratios(101);
    for (int k = 0; k <= 100; ++k)
        ratios[k] = k / 100.0;
    const std::vector<SweepRow> rows = symmetric_sweep(snr, ratios);

    bool pass = true;
    double worst_deficit = 0.0;
    for (const SweepRow& r : rows) {
        const double hk = hk_symmetric_sum_rate(SymmetricGains(snr, std::pow(snr, r.ratio)), 1001) / awgn;
        worst_deficit = std::max(worst_deficit, hk - r.sum_rate_over_awgn);
    }
    pass = pass && worst_deficit <= 1e-12;

    const SweepRow& top = rows.back();
    const double closed = std::log2(1.0 + 2.0 * snr) / awgn;
    const double hk_top = hk_symmetric_sum_rate(SymmetricGains(snr, snr), 1001) / awgn;
    const bool top_ok = top.lambda_star == 0.0 && std::abs(top.sum_rate_over_awgn - 0.5973) <= 1e-3 &&
                        std::abs(top.sum_rate_over_awgn - closed) <= 1e-9 &&
                        std::abs(top.sum_rate_over_awgn - hk_top) <= 1e-3;
    pass = pass && top_ok;

    // lambda* = 1 needs inr below ~0.94 here, i.e. a negative ratio
    double worst_low = 0.0;
    bool low_saturated = true;
    for (double inr : {0.0, 0.1, 0.5, 0.9}) {
        const SymmetricGains sg(snr, inr);
        low_saturated = low_saturated && optimal_lambda_symmetric(sg) == 1.0;
        worst_low = std::max(worst_low, std::abs(symmetric_sum_rate(sg, 1.0) - hk_symmetric_sum_rate(sg, 1001)) / awgn);
    }
    pass = pass && low_saturated && worst_low <= 1e-3;

    return {pass, "101 ratios; max(HK - NCRS) " + fmt("%.2e", worst_deficit) + "; ratio 1: " +
                      fmt("%.6f", top.sum_rate_over_awgn) + " (closed form " + fmt("%.6f", closed) + ", HK " +
                      fmt("%.6f", hk_top) + ", lambda* " + fmt("%g", top.lambda_star) +
                      "); low-inr lambda*=1 " + (low_saturated ? "yes" : "NO") + ", |NCRS - HK| " +
                      fmt("%.2e", worst_low)};
}

// 3. sc <= ncrs <= dpc_pac <= dpc on random channels.
Outcome sandwich()
{
    std::mt19937_64 rng(3003);
    const PowerBudget p(2.0);
    const double eps = 1e-3;
    struct Link {
        const char* name;
        int failures = 0;
        double worst = 0.0;
    };
    Link links[3] = {{"sc<=ncrs"}, {"ncrs<=dpc_pac"}, {"dpc_pac<=dpc"}};
    int channels_ok = 0;
    for (int t = 0; t < 100; ++t) {
        const ComplexChannel ch = oracle::random_channel(rng);
        const LinkGains g = gains_from_channel(ch, p);
        const Frontier sc = sc_frontier(g, 200);
        const Frontier nc = ncrs_frontier(g, 200);
        const Frontier pac = dpc_pac_frontier(ch, p, OptimizerOptions{}).frontier;
        const Frontier dpc = dpc_frontier(ch, p, 200);
        const Containment c[3] = {contains(nc, sc, eps), contains(pac, nc, eps), contains(dpc, pac, eps)};
        bool all = true;
        for (int k = 0; k < 3; ++k) {
            links[k].failures += !c[k].holds;
            links[k].worst = std::max(links[k].worst, c[k].worst_violation);
            all = all && c[k].holds;
        }
        channels_ok += all;
    }
    std::string detail = std::to_string(channels_ok) + "/100 channels hold;";
    bool pass = true;
    for (const Link& l : links) {
        detail += std::string(" ") + l.name + " " + std::to_string(100 - l.failures) + "/100 (worst " +
                  fmt("%.3g", l.worst) + ")";
        pass = pass && l.failures == 0;
    }
    return {pass, detail};
}

// 4. Equal gains: NCRS and SC coincide.
Outcome equal_gains()
{
    double worst = 0.0;
    for (double g : {0.1, 1.0, 3.0, 10.0, 100.0}) {
        const LinkGains lg(g, g, g, g);
        worst = std::max(worst, movement(ncrs_frontier(lg, 200), sc_frontier(lg, 200)));
    }
    return {worst <= 1e-3, "5 gain levels; worst two-sided distance " + fmt("%.2e", worst) + " (tol 1e-3)"};
}

// 5. Phase re-draws leave NCRS, SC and FDM untouched and move DPC.
Outcome phase_invariance()
{
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const PowerBudget p(2.0);
    const ComplexChannel base = oracle::random_channel(rng);
    const LinkGains g0 = gains_from_channel(base, p);
    const Frontier nc0 = ncrs_frontier(g0), sc0 = sc_frontier(g0, 200), fdm0 = fdm_frontier(g0, 200);
    const Frontier dpc0 = dpc_frontier(base, p, 200);

    int identical = 0;
    double dpc_moved = 0.0;
    for (int t = 0; t < 50; ++t) {
        auto redraw = [&](int u, int a) { return Tap{base.tap(u, a).magnitude, phase(rng)}; };
        const ComplexChannel ch(redraw(1, 1), redraw(1, 2), redraw(2, 1), redraw(2, 2));
        const LinkGains g = gains_from_channel(ch, p);
        identical += same_bits(ncrs_frontier(g), nc0) && same_bits(sc_frontier(g, 200), sc0) &&
                     same_bits(fdm_frontier(g, 200), fdm0);
        dpc_moved = std::max(dpc_moved, movement(dpc_frontier(ch, p, 200), dpc0));
    }
    return {identical == 50 && dpc_moved > 1e-3, std::to_string(identical) +
                                                     "/50 redraws bit-identical (ncrs, sc, fdm); largest dpc "
                                                     "movement " +
                                                     fmt("%.3g", dpc_moved) + " (needs > 1e-3)"};
}

// 6. DPC-pac optimizer against the covariance grid oracle.
Outcome dpc_pac_oracle()
{
    std::mt19937_64 rng(6006);
    const PowerBudget p(2.0);
    double worst = 0.0, shortfall = 0.0;
    int cases = 0;
    for (int t = 0; t < 20; ++t) {
        const ComplexChannel ch = oracle::random_channel(rng, -10.0, 5.0);
        for (double mu : {0.25, 0.5, 0.75})
            for (int first : {1, 2}) {
                const double opt = dpc_pac_weighted_max(ch, p, mu, first, OptimizerOptions{}).objective;
                const double grid = oracle::dpc_pac_grid_oracle(ch, p.total(), mu, first, 0.05);
                worst = std::max(worst, std::abs(opt - grid) / grid);
                shortfall = std::max(shortfall, (grid - opt) / grid);
                ++cases;
            }
    }
    return {worst <= 0.02, "20 channels x 3 weights x 2 orders = " + std::to_string(cases) +
                               " cases; worst relative gap " + fmt("%.2e", worst) +
                               " (tol 2e-2), worst shortfall below grid " + fmt("%.2e", shortfall)};
}

// 7. Axis intercepts and the per-antenna single-user penalty.
Outcome anchors()
{
    std::mt19937_64 rng(7007);
    const PowerBudget p(2.0);
    double worst_dpc = 0.0, worst_pac = 0.0, worst_equal = 0.0, smallest_strict = INFINITY;
    for (int t = 0; t < 10; ++t) {
        const ComplexChannel ch = oracle::random_channel(rng);
        const Frontier dpc = dpc_frontier(ch, p, 200);
        const Frontier pac = dpc_pac_frontier(ch, p, OptimizerOptions{}).frontier;
        worst_dpc = std::max({worst_dpc, std::abs(dpc.max_r1() - miso_capacity(ch, 1, p)),
                              std::abs(dpc.max_r2() - miso_capacity(ch, 2, p))});
        worst_pac = std::max({worst_pac, std::abs(pac.max_r1() - miso_pac_capacity(ch, 1, p)),
                              std::abs(pac.max_r2() - miso_pac_capacity(ch, 2, p))});
    }
    for (int t = 0; t < 1000; ++t) {
        const ComplexChannel ch = oracle::random_channel(rng);
        for (int u : {1, 2})
            smallest_strict = std::min(smallest_strict, miso_capacity(ch, u, p) - miso_pac_capacity(ch, u, p));
        const ComplexChannel eq(ch.tap(1, 1), {ch.tap(1, 1).magnitude, ch.tap(1, 2).phase}, ch.tap(2, 1),
                                {ch.tap(2, 1).magnitude, ch.tap(2, 2).phase});
        for (int u : {1, 2})
            worst_equal = std::max(worst_equal, std::abs(miso_capacity(eq, u, p) - miso_pac_capacity(eq, u, p)));
    }
    const bool pass = worst_dpc <= 1e-3 && worst_pac <= 1e-3 && smallest_strict > 1e-9 && worst_equal <= 1e-9;
    return {pass, "intercepts on 10 channels: dpc vs miso " + fmt("%.2e", worst_dpc) + ", dpc_pac vs miso_pac " +
                      fmt("%.2e", worst_pac) + " (tol 1e-3); 2000 unequal rows: min(miso - miso_pac) " +
                      fmt("%.2e", smallest_strict) + " (> 1e-9); equal rows: max gap " + fmt("%.2e", worst_equal) +
                      " (<= 1e-9)"};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& args)
{
    const std::string cmd = "\"" NCRS_CLI_PATH "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return raw != -1 && WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// 8. Repeated CLI runs write the same bytes.
Outcome determinism()
{
    const fs::path root = fs::temp_directory_path() / "ncrs_acceptance_determinism";
    fs::remove_all(root);
    const std::string cfg = std::string(NCRS_CONFIG_DIR) + "/strong_cross.conf";
    int codes = 0;
    for (const char* run : {"a", "b"}) {
        codes += run_cli("region --config \"" + cfg + "\" --seed 7 --out-dir \"" + (root / run / "region").string() + "\"");
        codes += run_cli("symmetric --out-dir \"" + (root / run / "symmetric").string() + "\"");
    }
    if (codes != 0)
        return {false, "a CLI run exited nonzero"};

    int compared = 0, differing = 0;
    for (const char* sub : {"region", "symmetric"})
        for (const auto& e : fs::directory_iterator(root / "a" / sub)) {
            if (e.path().extension() != ".csv")
                continue;
            ++compared;
            differing += slurp(e.path()) != slurp(root / "b" / sub / e.path().filename());
        }
    fs::remove_all(root);
    return {compared == 8 && differing == 0,
            std::to_string(compared) + " csv files compared across two runs, " + std::to_string(differing) +
                " differ"};
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all = {
        {1, "closed-form lambda*", 10.0, closed_form_lambda},
        {2, "symmetric sweep at 15 dB", 5.0, symmetric_sweep_15db},
        {3, "sandwich containment", 300.0, sandwich},
        {4, "equal gains: ncrs = sc", 10.0, equal_gains},
        {5, "phase invariance", 60.0, phase_invariance},
        {6, "dpc_pac optimizer vs grid oracle", 300.0, dpc_pac_oracle},
        {7, "single-user anchors", 10.0, anchors},
        {8, "cli determinism", 0.0, determinism},
    };

    std::vector<int> selected;
    for (int k = 1; k < argc; ++k) {
        char* end = nullptr;
        const long id = std::strtol(argv[k], &end, 10);
        if (*end != '\0' || id < 1 || id > static_cast<long>(all.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1-%zu ...]\n", argv[0], all.size());
            return 2;
        }
        selected.push_back(static_cast<int>(id));
    }

    int failures = 0;
    for (const Criterion& c : all) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = fmt("%.2f s", secs);
        if (c.budget_s > 0.0) {
            timing += fmt(" of %g s", c.budget_s);
            if (secs > c.budget_s) {
                o.pass = false;
                timing += ", over budget";
            }
        }
        std::printf("[%s] %d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
