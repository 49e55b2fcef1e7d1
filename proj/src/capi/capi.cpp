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

#include "ncrs/capi.h"

#include "ncrs/baselines.hpp"
#include "ncrs/channel.hpp"
#include "ncrs/error.hpp"
#include "ncrs/ncrs.hpp"
#include "ncrs/region.hpp"

#include <cmath>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct ncrs_channel {
    ncrs::LinkGains gains;
    std::optional<ncrs::ComplexChannel> complex;
    std::optional<ncrs::PowerBudget> power;
};

struct ncrs_frontier {
    ncrs::Frontier frontier;
    bool converged = true;
};

namespace {

thread_local std::string last_error;

ncrs_status from_code(ncrs::ErrorCode code)
{
    switch (code) {
    case ncrs::ErrorCode::invalid_argument: return NCRS_INVALID_ARGUMENT;
    case ncrs::ErrorCode::missing_phase: return NCRS_MISSING_PHASE;
    case ncrs::ErrorCode::io: return NCRS_IO;
    case ncrs::ErrorCode::parse: return NCRS_PARSE;
    }
    return NCRS_INTERNAL;
}

ncrs_status set_error(ncrs_status status, const char* what)
{
    last_error = what;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ncrs_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        return body();
    } catch (const ncrs::Error& e) {
        return set_error(from_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(NCRS_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(NCRS_INTERNAL, e.what());
    } catch (...) {
        return set_error(NCRS_INTERNAL, "unknown error");
    }
}

#define NCRS_REQUIRE(cond, msg)                                                                    \
    do {                                                                                           \
        if (!(cond))                                                                               \
            return set_error(NCRS_INVALID_ARGUMENT, msg);                                          \
    } while (0)

ncrs::OptimizerOptions optimizer_options(const ncrs_solver_config& c)
{
    ncrs::OptimizerOptions o;
    o.starts = c.starts;
    o.max_iterations = c.max_iterations;
    o.tolerance = c.tolerance;
    o.seed = c.seed;
    o.validate();
    return o;
}

const char* scheme_name(ncrs_scheme scheme)
{
    switch (scheme) {
    case NCRS_SCHEME_NCRS: return "ncrs";
    case NCRS_SCHEME_DPC: return "dpc";
    case NCRS_SCHEME_DPC_PAC: return "dpc_pac";
    case NCRS_SCHEME_MISO: return "miso";
    case NCRS_SCHEME_MISO_PAC: return "miso_pac";
    case NCRS_SCHEME_SC: return "sc";
    case NCRS_SCHEME_FDM: return "fdm";
    }
    return "unknown";
}

const ncrs::ComplexChannel& full_csit(const ncrs_channel& ch, ncrs_scheme scheme)
{
    if (!ch.complex)
        throw ncrs::Error(ncrs::ErrorCode::missing_phase,
                          std::string(scheme_name(scheme)) + " needs channel phases (full CSIT)");
    return *ch.complex;
}

} // namespace

extern "C" {

const char* ncrs_version(void)
{
    return "0.1.0";
}

const char* ncrs_status_string(ncrs_status status)
{
    switch (status) {
    case NCRS_OK: return "ok";
    case NCRS_INVALID_ARGUMENT: return "invalid argument";
    case NCRS_MISSING_PHASE: return "missing channel phases";
    case NCRS_NOT_CONVERGED: return "optimizer did not converge";
    case NCRS_IO: return "i/o error";
    case NCRS_PARSE: return "parse error";
    case NCRS_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ncrs_last_error(void)
{
    return last_error.c_str();
}

void ncrs_solver_config_default(ncrs_solver_config* config)
{
    if (config == nullptr)
        return;
    const ncrs::OptimizerOptions o;
    config->grid_steps = ncrs::kDefaultFrontierGrid;
    config->dpc_grid_steps = 200;
    config->refine_tol = ncrs::kDefaultRefineTolerance;
    config->starts = o.starts;
    config->max_iterations = o.max_iterations;
    config->tolerance = o.tolerance;
    config->seed = o.seed;
    config->weight_count = 65;
}

ncrs_status ncrs_channel_from_gains(double g11, double g12, double g21, double g22, ncrs_channel** out)
{
    NCRS_REQUIRE(out != nullptr, "null output pointer");
    return guarded([&] {
        *out = new ncrs_channel{ncrs::LinkGains(g11, g12, g21, g22), std::nullopt, std::nullopt};
        return NCRS_OK;
    });
}

ncrs_status ncrs_channel_from_taps(const double magnitude[4], const double phase[4], double power_total,
                                   ncrs_channel** out)
{
    NCRS_REQUIRE(out != nullptr && magnitude != nullptr && phase != nullptr, "null pointer argument");
    return guarded([&] {
        const ncrs::ComplexChannel ch({magnitude[0], phase[0]}, {magnitude[1], phase[1]},
                                      {magnitude[2], phase[2]}, {magnitude[3], phase[3]});
        const ncrs::PowerBudget p(power_total);
        *out = new ncrs_channel{ncrs::gains_from_channel(ch, p), ch, p};
        return NCRS_OK;
    });
}

void ncrs_channel_free(ncrs_channel* channel)
{
    delete channel;
}

int ncrs_channel_has_phases(const ncrs_channel* channel)
{
    return channel != nullptr && channel->complex.has_value();
}

ncrs_status ncrs_channel_gains(const ncrs_channel* channel, double gains[4])
{
    NCRS_REQUIRE(channel != nullptr && gains != nullptr, "null pointer argument");
    const ncrs::LinkGains& g = channel->gains;
    gains[0] = g.g11();
    gains[1] = g.g12();
    gains[2] = g.g21();
    gains[3] = g.g22();
    return NCRS_OK;
}

ncrs_status ncrs_compute_frontier(const ncrs_channel* channel, ncrs_scheme scheme,
                                  const ncrs_solver_config* config, ncrs_frontier** out)
{
    NCRS_REQUIRE(channel != nullptr && out != nullptr, "null pointer argument");
    *out = nullptr;
    ncrs_solver_config defaults;
    ncrs_solver_config_default(&defaults);
    const ncrs_solver_config& c = config != nullptr ? *config : defaults;
    return guarded([&] {
        const ncrs::LinkGains& g = channel->gains;
        switch (scheme) {
        case NCRS_SCHEME_NCRS:
            *out = new ncrs_frontier{ncrs::ncrs_frontier(g, c.grid_steps, c.refine_tol)};
            return NCRS_OK;
        case NCRS_SCHEME_SC:
            *out = new ncrs_frontier{ncrs::sc_frontier(g, c.grid_steps)};
            return NCRS_OK;
        case NCRS_SCHEME_FDM:
            *out = new ncrs_frontier{ncrs::fdm_frontier(g, c.grid_steps)};
            return NCRS_OK;
        case NCRS_SCHEME_DPC:
            *out = new ncrs_frontier{
                ncrs::dpc_frontier(full_csit(*channel, scheme), *channel->power, c.dpc_grid_steps)};
            return NCRS_OK;
        case NCRS_SCHEME_MISO:
            *out = new ncrs_frontier{ncrs::miso_frontier(full_csit(*channel, scheme), *channel->power)};
            return NCRS_OK;
        case NCRS_SCHEME_MISO_PAC:
            *out = new ncrs_frontier{ncrs::miso_pac_frontier(full_csit(*channel, scheme), *channel->power)};
            return NCRS_OK;
        case NCRS_SCHEME_DPC_PAC: {
            const ncrs::ComplexChannel& ch = full_csit(*channel, scheme);
            ncrs::DpcPacResult r =
                ncrs::dpc_pac_frontier(ch, *channel->power, optimizer_options(c), c.weight_count);
            *out = new ncrs_frontier{std::move(r.frontier), r.converged};
            if (!r.converged)
                return set_error(NCRS_NOT_CONVERGED, "DPC-pac ascent stopped above tolerance");
            return NCRS_OK;
        }
        }
        return set_error(NCRS_INVALID_ARGUMENT, "unknown scheme");
    });
}

ncrs_status ncrs_frontier_from_points(const double* r1, const double* r2, size_t count, ncrs_frontier** out)
{
    NCRS_REQUIRE(out != nullptr && r1 != nullptr && r2 != nullptr, "null pointer argument");
    return guarded([&] {
        std::vector<ncrs::RatePoint> pts(count);
        for (size_t k = 0; k < count; ++k)
            pts[k] = {r1[k], r2[k]};
        *out = new ncrs_frontier{ncrs::upper_hull(pts)};
        return NCRS_OK;
    });
}

void ncrs_frontier_free(ncrs_frontier* frontier)
{
    delete frontier;
}

size_t ncrs_frontier_size(const ncrs_frontier* frontier)
{
    return frontier != nullptr ? frontier->frontier.size() : 0;
}

ncrs_status ncrs_frontier_point(const ncrs_frontier* frontier, size_t index, double* r1, double* r2)
{
    NCRS_REQUIRE(frontier != nullptr && r1 != nullptr && r2 != nullptr, "null pointer argument");
    NCRS_REQUIRE(index < frontier->frontier.size(), "point index out of range");
    const ncrs::RatePoint& p = frontier->frontier.points()[index];
    *r1 = p.r1;
    *r2 = p.r2;
    return NCRS_OK;
}

double ncrs_frontier_max_r1(const ncrs_frontier* frontier)
{
    return frontier != nullptr ? frontier->frontier.max_r1() : 0.0;
}

double ncrs_frontier_max_r2(const ncrs_frontier* frontier)
{
    return frontier != nullptr ? frontier->frontier.max_r2() : 0.0;
}

int ncrs_frontier_converged(const ncrs_frontier* frontier)
{
    return frontier != nullptr && frontier->converged;
}

ncrs_status ncrs_frontier_read_csv(const char* path, ncrs_frontier** out)
{
    NCRS_REQUIRE(path != nullptr && out != nullptr, "null pointer argument");
    return guarded([&] {
        *out = new ncrs_frontier{ncrs::read_csv(path)};
        return NCRS_OK;
    });
}

ncrs_status ncrs_frontier_write_csv(const ncrs_frontier* frontier, const char* path)
{
    NCRS_REQUIRE(frontier != nullptr && path != nullptr, "null pointer argument");
    return guarded([&] {
        ncrs::write_csv(frontier->frontier, path);
        return NCRS_OK;
    });
}

ncrs_status ncrs_frontier_to_csv(const ncrs_frontier* frontier, char* buffer, size_t capacity, size_t* needed)
{
    NCRS_REQUIRE(frontier != nullptr, "null frontier");
    NCRS_REQUIRE(buffer != nullptr || capacity == 0, "null buffer with nonzero capacity");
    return guarded([&] {
        const std::string text = ncrs::to_csv(frontier->frontier);
        if (needed != nullptr)
            *needed = text.size();
        if (capacity > 0) {
            const size_t n = std::min(capacity - 1, text.size());
            std::memcpy(buffer, text.data(), n);
            buffer[n] = '\0';
        }
        return NCRS_OK;
    });
}

ncrs_status ncrs_contains(const ncrs_frontier* outer, const ncrs_frontier* inner, double eps,
                          ncrs_containment* result)
{
    NCRS_REQUIRE(outer != nullptr && inner != nullptr && result != nullptr, "null pointer argument");
    return guarded([&] {
        const ncrs::Containment c = ncrs::contains(outer->frontier, inner->frontier, eps);
        result->holds = c.holds;
        result->worst_violation = c.worst_violation;
        result->worst_r1 = c.worst_point.r1;
        result->worst_r2 = c.worst_point.r2;
        return NCRS_OK;
    });
}

ncrs_status ncrs_split_rates(const ncrs_channel* channel, double lambda1, double lambda2, double alpha,
                             double rates[5])
{
    NCRS_REQUIRE(channel != nullptr && rates != nullptr, "null pointer argument");
    return guarded([&] {
        const ncrs::NcrsRates r =
            ncrs::ncrs_rates(channel->gains, ncrs::SplitParams(lambda1, lambda2, alpha));
        rates[0] = r.r1p;
        rates[1] = r.r2p;
        rates[2] = r.rc;
        rates[3] = r.r1;
        rates[4] = r.r2;
        return NCRS_OK;
    });
}

ncrs_status ncrs_symmetric_sum_rate(double snr, double inr, double lambda, double* out)
{
    NCRS_REQUIRE(out != nullptr, "null output pointer");
    return guarded([&] {
        *out = ncrs::symmetric_sum_rate(ncrs::SymmetricGains(snr, inr), lambda);
        return NCRS_OK;
    });
}

ncrs_status ncrs_optimal_lambda(double snr, double inr, double* out)
{
    NCRS_REQUIRE(out != nullptr, "null output pointer");
    return guarded([&] {
        *out = ncrs::optimal_lambda_symmetric(ncrs::SymmetricGains(snr, inr));
        return NCRS_OK;
    });
}

ncrs_status ncrs_hk_symmetric_sum_rate(double snr, double inr, int grid_steps, double* out)
{
    NCRS_REQUIRE(out != nullptr, "null output pointer");
    return guarded([&] {
        *out = ncrs::hk_symmetric_sum_rate(ncrs::SymmetricGains(snr, inr), grid_steps);
        return NCRS_OK;
    });
}

ncrs_status ncrs_symmetric_sweep(double snr, const double* ratios, size_t count, int hk_grid_steps,
                                 ncrs_sweep_row* rows)
{
    NCRS_REQUIRE(ratios != nullptr && rows != nullptr, "null pointer argument");
    return guarded([&] {
        const auto table = ncrs::symmetric_sweep(snr, std::span<const double>(ratios, count));
        const double awgn = 2.0 * std::log2(1.0 + snr);
        for (size_t k = 0; k < count; ++k) {
            const double inr = std::pow(snr, table[k].ratio);
            const double hk = ncrs::hk_symmetric_sum_rate(ncrs::SymmetricGains(snr, inr), hk_grid_steps);
            rows[k] = {table[k].ratio, inr,        table[k].lambda_star, table[k].sum_rate,
                       table[k].sum_rate_over_awgn, hk, hk / awgn};
        }
        return NCRS_OK;
    });
}

ncrs_status ncrs_miso_capacity(const ncrs_channel* channel, int user, double* out)
{
    NCRS_REQUIRE(channel != nullptr && out != nullptr, "null pointer argument");
    return guarded([&] {
        *out = ncrs::miso_capacity(full_csit(*channel, NCRS_SCHEME_MISO), user, *channel->power);
        return NCRS_OK;
    });
}

ncrs_status ncrs_miso_pac_capacity(const ncrs_channel* channel, int user, double* out)
{
    NCRS_REQUIRE(channel != nullptr && out != nullptr, "null pointer argument");
    return guarded([&] {
        *out = ncrs::miso_pac_capacity(full_csit(*channel, NCRS_SCHEME_MISO_PAC), user, *channel->power);
        return NCRS_OK;
    });
}

double ncrs_db_to_linear(double db)
{
    return ncrs::db_to_linear(db);
}

ncrs_status ncrs_linear_to_db(double linear, double* out)
{
    NCRS_REQUIRE(out != nullptr, "null output pointer");
    return guarded([&] {
        *out = ncrs::linear_to_db(linear);
        return NCRS_OK;
    });
}

} // extern "C"
