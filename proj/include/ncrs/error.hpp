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

#ifndef NCRS_ERROR_HPP
#define NCRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncrs {

enum class ErrorCode {
    invalid_argument,
    missing_phase,   // full-CSIT scheme requested on a magnitude-only channel
    io,
    parse
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(const std::string& what)
{
    throw Error(ErrorCode::invalid_argument, what);
}

} // namespace ncrs

#endif
