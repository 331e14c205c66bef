// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: link-level simulator for IRS-assisted downlink secrecy
// Copyright (C) 2026 The irs-secrecy authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace irs
{
    // Gram matrix of the effective channel is singular or too badly conditioned to invert
    struct IllConditioned : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Rejection sampling of the IRS positions ran out of attempts
    struct PlacementFailure : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Two endpoints of a radio link coincide
    struct DegenerateGeometry : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Permutation enumeration would exceed the configured cap
    struct SizeLimit : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // No (set, tau) pair meets the minimum average rate
    struct Infeasible : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct ParseError : std::runtime_error
    {
        ParseError(const std::string &message, std::size_t line_no)
            : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no)
        {
        }
        std::size_t line;
    };

    struct ValidationError : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct IoError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };
}
