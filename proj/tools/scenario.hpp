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

#ifndef NCRS_TOOLS_SCENARIO_HPP
#define NCRS_TOOLS_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitMissingPhase = 3;
inline constexpr int kExitNotConverged = 4;
inline constexpr int kExitSandwichViolated = 5;

/// Failure that maps to a process exit code.
class UsageError : public std::runtime_error {
public:
    UsageError(int exit_code, const std::string& what) : std::runtime_error(what), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

struct Taps {
    std::array<double, 4> magnitude{};   // h11, h12, h21, h22
    std::array<double, 4> phase_rad{};
};

struct Scenario {
    double power_total = 2.0;
    std::optional<std::array<double, 4>> gains;   // linear, g11 g12 g21 g22
    std::optional<Taps> taps;

    int ncrs_grid = 101;
    double refine_tol = 5e-7;
    int sc_grid = 200;
    int fdm_grid = 200;
    int dpc_grid = 200;

    int starts = 16;
    int max_iterations = 5000;
    double tolerance = 1e-7;
    std::uint64_t seed = 20190417;
    int weights = 65;

    std::vector<std::string> baselines;   // canonical names, config order
};

/// Canonical lower-case baseline name, or nullopt.
std::optional<std::string> canonical_baseline(const std::string& name);

bool needs_phases(const std::string& scheme);

/// Parses the flat `key = value` format; dotted keys or [section] headers
/// name the section. Throws UsageError(kExitInvalidConfig) on any defect.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

} // namespace cli

#endif
