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

#include "irs/errors.hpp"
#include "irs/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <tuple>

namespace irs
{
    bool ExperimentResult::any_infeasible() const
    {
        return std::any_of(objectives.begin(), objectives.end(), [](const SeedObjective &o)
                           { return !o.feasible; });
    }

    std::uint64_t selection_seed(std::uint64_t scenario_seed, std::size_t set_size)
    {
        // splitmix64 finalizer over the pair
        std::uint64_t z = scenario_seed * 0x9E3779B97F4A7C15ull + set_size + 0x72616E646F6Dull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    namespace
    {
        PermutationSet select(const PermutationTable &table, SelectionMethod method, std::size_t size,
                              std::uint64_t seed)
        {
            switch (method)
            {
            case SelectionMethod::best_rate:
                return select_best_rate(table, size);
            case SelectionMethod::uniform_irs:
                return select_uniform_irs(table, size);
            case SelectionMethod::random:
                return select_random(table, size, selection_seed(seed, size));
            case SelectionMethod::explicit_list:
                break;
            }
            throw ValidationError("explicit sets cannot be swept");
        }
    }

    ExperimentResult run_experiment(const ExperimentConfig &cfg)
    {
        cfg.validate();
        ExperimentResult result;
        const std::size_t delta = cfg.delta_value();

        for (std::uint64_t seed : cfg.seeds)
        {
            PermutationTable table;
            std::string failure;
            try
            {
                const Scenario s = random_scenario(seed, cfg.scenario);
                const LinkAngles angles = compute_angles(s);
                const ChannelSet ch = build_channels(s, angles);
                table = evaluate_all(s, ch, angles, cfg.link);
            }
            catch (const IllConditioned &e)
            {
                failure = e.what();
            }
            catch (const PlacementFailure &e)
            {
                failure = e.what();
            }
            catch (const DegenerateGeometry &e)
            {
                failure = e.what();
            }
            if (!failure.empty())
            {
                std::cerr << "seed " << seed << " skipped: " << failure << '\n';
                result.skipped.push_back({seed, std::move(failure)});
                continue;
            }

            std::vector<PermutationSet> candidates;
            for (auto method : cfg.methods)
                for (std::size_t size : cfg.set_sizes)
                    candidates.push_back(select(table, method, size, seed));

            const auto entries = sweep(table, candidates, cfg.tau_grid, delta, cfg.r_min);
            for (const auto &e : entries)
                for (std::size_t k = 0; k < table.num_ues; ++k)
                    result.rows.push_back({seed, candidates[e.candidate].method, e.set_size, e.tau, k, e.avg_rate[k],
                                           e.sr_static[k], e.sr_dynamic[k], e.sr_combined[k], e.max_usage,
                                           e.feasible});

            SeedObjective obj{seed};
            if (const auto best = best_entry(entries))
            {
                const auto &e = entries[*best];
                obj = {seed, true, candidates[e.candidate].method, e.set_size, e.tau, e.score};
            }
            result.objectives.push_back(obj);
        }

        auto key = [](const ResultRow &r)
        { return std::tuple(r.seed, static_cast<int>(r.method), r.set_size, r.tau, r.ue); };
        std::stable_sort(result.rows.begin(), result.rows.end(), [&](const ResultRow &a, const ResultRow &b)
                         { return key(a) < key(b); });
        return result;
    }

    std::string format_csv(const std::vector<ResultRow> &rows)
    {
        std::string out(csv_header);
        out += '\n';
        char buf[512];
        for (const auto &r : rows)
        {
            const int n = std::snprintf(buf, sizeof buf, "%llu,%s,%zu,%zu,%zu,%.9g,%.9g,%.9g,%.9g,%.9g,%s\n",
                                        static_cast<unsigned long long>(r.seed), to_string(r.method).data(),
                                        r.set_size, r.tau, r.ue + 1, r.avg_rate, r.sr_static, r.sr_dynamic,
                                        r.sr_combined, r.max_usage, r.feasible ? "true" : "false");
            out.append(buf, static_cast<std::size_t>(n));
        }
        return out;
    }

    void write_csv(const std::vector<ResultRow> &rows, const std::filesystem::path &path)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + path.string() + " for writing");
        const std::string text = format_csv(rows);
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out)
            throw IoError("failed writing " + path.string());
    }
}
