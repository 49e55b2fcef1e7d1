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

/* C interface of libncrs. All handles are opaque; every fallible call returns
   an ncrs_status and leaves a message for ncrs_last_error() on failure. */

#ifndef NCRS_CAPI_H
#define NCRS_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NCRS_BUILDING_LIBRARY)
#    define NCRS_API __declspec(dllexport)
#  else
#    define NCRS_API __declspec(dllimport)
#  endif
#else
#  define NCRS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncrs_status {
    NCRS_OK = 0,
    NCRS_INVALID_ARGUMENT = 1,
    NCRS_MISSING_PHASE = 2,   /* full-CSIT scheme on a gains-only channel */
    NCRS_NOT_CONVERGED = 3,   /* result is still produced */
    NCRS_IO = 4,
    NCRS_PARSE = 5,
    NCRS_INTERNAL = 6
} ncrs_status;

typedef enum ncrs_scheme {
    NCRS_SCHEME_NCRS = 0,
    NCRS_SCHEME_DPC = 1,
    NCRS_SCHEME_DPC_PAC = 2,
    NCRS_SCHEME_MISO = 3,
    NCRS_SCHEME_MISO_PAC = 4,
    NCRS_SCHEME_SC = 5,
    NCRS_SCHEME_FDM = 6
} ncrs_scheme;

typedef struct ncrs_channel ncrs_channel;
typedef struct ncrs_frontier ncrs_frontier;

typedef struct ncrs_solver_config {
    int grid_steps;          /* lambda grid of NCRS, beta/t grid of SC and FDM */
    int dpc_grid_steps;      /* power split grid of DPC */
    double refine_tol;       /* NCRS hull refinement, 0 disables */
    int starts;              /* DPC-pac random starts */
    int max_iterations;
    double tolerance;
    uint64_t seed;
    int weight_count;        /* DPC-pac scalarization weights */
} ncrs_solver_config;

typedef struct ncrs_sweep_row {
    double ratio;            /* log(inr) / log(snr) */
    double inr;
    double lambda_star;
    double ncrs_sum_rate;
    double ncrs_sum_over_awgn;
    double hk_sum_rate;
    double hk_sum_over_awgn;
} ncrs_sweep_row;

typedef struct ncrs_containment {
    int holds;
    double worst_violation;
    double worst_r1;         /* offending inner point */
    double worst_r2;
} ncrs_containment;

NCRS_API const char* ncrs_version(void);
NCRS_API const char* ncrs_status_string(ncrs_status status);
/* Message of the last failed call on this thread, "" if none. */
NCRS_API const char* ncrs_last_error(void);

NCRS_API void ncrs_solver_config_default(ncrs_solver_config* config);

/* -- channels ----------------------------------------------------------- */

/* Link gains gamma_ij (linear), magnitude-only knowledge. */
NCRS_API ncrs_status ncrs_channel_from_gains(double g11, double g12, double g21, double g22,
                                             ncrs_channel** out);
/* Taps ordered h11, h12, h21, h22; phases in radians. */
NCRS_API ncrs_status ncrs_channel_from_taps(const double magnitude[4], const double phase[4],
                                            double power_total, ncrs_channel** out);
NCRS_API void ncrs_channel_free(ncrs_channel* channel);
NCRS_API int ncrs_channel_has_phases(const ncrs_channel* channel);
NCRS_API ncrs_status ncrs_channel_gains(const ncrs_channel* channel, double gains[4]);

/* -- frontiers ---------------------------------------------------------- */

/* NCRS_NOT_CONVERGED still stores a frontier in *out (best found). */
NCRS_API ncrs_status ncrs_compute_frontier(const ncrs_channel* channel, ncrs_scheme scheme,
                                           const ncrs_solver_config* config, ncrs_frontier** out);
/* Upper hull of a point cloud. */
NCRS_API ncrs_status ncrs_frontier_from_points(const double* r1, const double* r2, size_t count,
                                               ncrs_frontier** out);
NCRS_API void ncrs_frontier_free(ncrs_frontier* frontier);

NCRS_API size_t ncrs_frontier_size(const ncrs_frontier* frontier);
NCRS_API ncrs_status ncrs_frontier_point(const ncrs_frontier* frontier, size_t index, double* r1,
                                         double* r2);
NCRS_API double ncrs_frontier_max_r1(const ncrs_frontier* frontier);
NCRS_API double ncrs_frontier_max_r2(const ncrs_frontier* frontier);
NCRS_API int ncrs_frontier_converged(const ncrs_frontier* frontier);

NCRS_API ncrs_status ncrs_frontier_read_csv(const char* path, ncrs_frontier** out);
NCRS_API ncrs_status ncrs_frontier_write_csv(const ncrs_frontier* frontier, const char* path);
/* Writes at most capacity bytes including the terminator; *needed gets the
   full length without it. */
NCRS_API ncrs_status ncrs_frontier_to_csv(const ncrs_frontier* frontier, char* buffer,
                                          size_t capacity, size_t* needed);

NCRS_API ncrs_status ncrs_contains(const ncrs_frontier* outer, const ncrs_frontier* inner,
                                   double eps, ncrs_containment* result);

/* -- scalar rates ------------------------------------------------------- */

/* rates = {r1p, r2p, rc, r1, r2} */
NCRS_API ncrs_status ncrs_split_rates(const ncrs_channel* channel, double lambda1, double lambda2,
                                      double alpha, double rates[5]);
NCRS_API ncrs_status ncrs_symmetric_sum_rate(double snr, double inr, double lambda, double* out);
NCRS_API ncrs_status ncrs_optimal_lambda(double snr, double inr, double* out);
NCRS_API ncrs_status ncrs_hk_symmetric_sum_rate(double snr, double inr, int grid_steps,
                                                double* out);
NCRS_API ncrs_status ncrs_symmetric_sweep(double snr, const double* ratios, size_t count,
                                          int hk_grid_steps, ncrs_sweep_row* rows);

NCRS_API ncrs_status ncrs_miso_capacity(const ncrs_channel* channel, int user, double* out);
NCRS_API ncrs_status ncrs_miso_pac_capacity(const ncrs_channel* channel, int user, double* out);

NCRS_API double ncrs_db_to_linear(double db);
NCRS_API ncrs_status ncrs_linear_to_db(double linear, double* out);

#ifdef __cplusplus
}
#endif

#endif
