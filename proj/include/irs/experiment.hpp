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

#include "irs/geometry.hpp"
#include "irs/link.hpp"
#include "irs/strategy.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irs
{
    // A full sweep: scenario template, seeds and the (method, set size, tau) grid.
    // Default-constructed values reproduce the reference deployment (32-antenna BS, four UEs,
    // four 64x64 IRSs, 100 GHz, 1 GHz bandwidth, 30 dBm, -174 dBm/Hz).
    struct ExperimentConfig
    {
        ScenarioTemplate scenario;
        LinkOptions link;
        std::vector<std::uint64_t> seeds = default_seeds();
        std::vector<std::size_t> tau_grid = default_tau_grid();
        std::vector<std::size_t> set_sizes{5, 10, 20};
        std::vector<SelectionMethod> methods{SelectionMethod::best_rate, SelectionMethod::uniform_irs,
                                             SelectionMethod::random};
        std::optional<std::size_t> delta; // nullopt = number of IRSs
        double r_min = 0.0;               // bit/s
        std::string output_path = "results.csv";

        std::size_t delta_value() const { return delta.value_or(scenario.num_irs); }

        // Throws ValidationError
        void validate() const;

        static std::vector<std::uint64_t> default_seeds();
        static std::vector<std::size_t> default_tau_grid();
    };

    // Parses "a..b", "a,b,c" or a mix such as "1..5,8". Throws ValidationError.
    std::vector<std::uint64_t> parse_integer_list(std::string_view text);

    double dbm_to_watt(double dbm);

    // Line-oriented INI-like format; see configs/reference.ini. Throws ParseError / ValidationError.
    ExperimentConfig parse_config(std::string_view text);
    ExperimentConfig load_config(const std::filesystem::path &path);

    struct ResultRow
    {
        std::uint64_t seed = 0;
        SelectionMethod method = SelectionMethod::best_rate;
        std::size_t set_size = 0;
        std::size_t tau = 0;
        std::size_t ue = 0; // 0-based; written 1-based
        double avg_rate = 0.0;
        double sr_static = 0.0;
        double sr_dynamic = 0.0;
        double sr_combined = 0.0;
        double max_usage = 0.0;
        bool feasible = false;
    };

    struct SeedObjective
    {
        std::uint64_t seed = 0;
        bool feasible = false;
        SelectionMethod method = SelectionMethod::best_rate;
        std::size_t set_size = 0;
        std::size_t tau = 0;
        double score = 0.0;
    };

    struct SkippedSeed
    {
        std::uint64_t seed = 0;
        std::string reason;
    };

    struct ExperimentResult
    {
        std::vector<ResultRow> rows; // sorted by (seed, method, set_size, tau, ue)
        std::vector<SeedObjective> objectives;
        std::vector<SkippedSeed> skipped; // degenerate scenarios, not present in rows

        bool any_infeasible() const;
    };

    // Seed for the random selection of one (scenario seed, set size) cell
    std::uint64_t selection_seed(std::uint64_t scenario_seed, std::size_t set_size);

    ExperimentResult run_experiment(const ExperimentConfig &cfg);

    inline constexpr std::string_view csv_header =
        "seed,method,set_size,tau,ue,avg_rate,sr_static,sr_dynamic,sr_combined,max_usage,feasible";

    std::string format_csv(const std::vector<ResultRow> &rows);
    // Throws IoError
    void write_csv(const std::vector<ResultRow> &rows, const std::filesystem::path &path);
}
