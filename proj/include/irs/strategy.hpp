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

#include "irs/link.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irs
{
    inline constexpr std::size_t max_permutations = 1'000'000;

    // n! / (n - k)!, or nullopt when it exceeds `limit`
    std::optional<std::size_t> permutation_count(std::size_t n, std::size_t k, std::size_t limit = max_permutations);

    // All injective maps {0..k-1} -> {0..n-1} in lexicographic order. Throws SizeLimit above `limit`.
    std::vector<Permutation> enumerate_permutations(std::size_t n, std::size_t k, std::size_t limit = max_permutations);

    // Every permutation of a scenario with its link metrics. Metrics depend only on the scenario,
    // so the table is built once and shared by all selection methods.
    struct PermutationTable
    {
        std::size_t num_ues = 0;
        std::size_t num_irs = 0;
        std::vector<Permutation> perms;
        std::vector<LinkMetrics> metrics; // parallel to perms

        std::size_t size() const { return perms.size(); }
        double sum_rate(std::size_t i) const;
    };

    // Propagates IllConditioned from any permutation
    PermutationTable evaluate_all(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                  const LinkOptions &opts = {});

    enum class SelectionMethod
    {
        best_rate,
        uniform_irs,
        random,
        explicit_list
    };

    std::string_view to_string(SelectionMethod m);
    // Accepts best_rate, uniform_irs, random and explicit; throws ValidationError otherwise
    SelectionMethod parse_selection_method(std::string_view name);

    // Subset of a PermutationTable, stored as sorted unique row indices
    struct PermutationSet
    {
        std::vector<std::size_t> members;
        SelectionMethod method = SelectionMethod::explicit_list;

        std::size_t size() const { return members.size(); }
    };

    // Validates the indices against the table (non-empty, in range, no duplicates) and sorts them
    PermutationSet make_set(const PermutationTable &table, std::vector<std::size_t> members,
                            SelectionMethod method = SelectionMethod::explicit_list);

    // omega(k, n): fraction of the set in which UE k is served by IRS n
    class UsageMatrix
    {
    public:
        UsageMatrix(std::size_t num_ues, std::size_t num_irs) : ues_(num_ues), irs_(num_irs), w_(num_ues * num_irs) {}

        double operator()(std::size_t k, std::size_t n) const { return w_[k * irs_ + n]; }
        double &operator()(std::size_t k, std::size_t n) { return w_[k * irs_ + n]; }
        std::size_t num_ues() const { return ues_; }
        std::size_t num_irs() const { return irs_; }

        double max() const;
        // Most used IRS for UE k, lowest index on ties
        std::size_t most_used(std::size_t k) const;

    private:
        std::size_t ues_, irs_;
        std::vector<double> w_;
    };

    UsageMatrix usage_matrix(const PermutationTable &table, const PermutationSet &set);

    // The `size` permutations with the highest sum rate; ties go to the lexicographically smaller map
    PermutationSet select_best_rate(const PermutationTable &table, std::size_t size);

    // Greedy: repeatedly add the permutation that minimizes the resulting max usage, breaking ties
    // by highest sum rate and then lexicographic order
    PermutationSet select_uniform_irs(const PermutationTable &table, std::size_t size);

    // Uniform sample without replacement, deterministic per seed
    PermutationSet select_random(const PermutationTable &table, std::size_t size, std::uint64_t seed);

    struct SchedulePolicy
    {
        std::size_t tau = 1;   // time units each permutation stays active
        std::size_t delta = 1; // time units the dynamic eavesdropper spends scanning
        double r_min = 0.0;    // bit/s
    };

    // tau/(tau+1) times the mean rate over the set, per UE
    std::vector<double> average_rate(const PermutationTable &table, const PermutationSet &set, std::size_t tau);

    // Eavesdropper parked on the IRS that serves the victim most often
    double sr_static(const PermutationTable &table, const PermutationSet &set, std::size_t victim);

    // Eavesdropper spends delta units per dwell scanning all IRSs, then locks onto the worst one
    double sr_dynamic(const PermutationTable &table, const PermutationSet &set, std::size_t victim,
                      const SchedulePolicy &policy);

    double sr_combined(const PermutationTable &table, const PermutationSet &set, std::size_t victim,
                       const SchedulePolicy &policy);

    // Relative tolerance under which two objective scores count as tied
    inline constexpr double objective_tie_tolerance = 1e-12;

    struct SweepEntry
    {
        std::size_t candidate = 0; // index into the candidate list
        std::size_t set_size = 0;
        std::size_t tau = 0;
        std::vector<double> avg_rate;    // [k]
        std::vector<double> sr_static;   // [victim]
        std::vector<double> sr_dynamic;  // [victim]
        std::vector<double> sr_combined; // [victim]
        double max_usage = 0.0;
        bool feasible = false;
        double score = 0.0; // min over victims of sr_combined
    };

    // Every (candidate, tau) pair, candidate-major
    std::vector<SweepEntry> sweep(const PermutationTable &table, const std::vector<PermutationSet> &candidates,
                                  const std::vector<std::size_t> &tau_grid, std::size_t delta, double r_min);

    struct ObjectiveResult
    {
        std::vector<SweepEntry> entries;
        std::size_t best = 0; // index into entries
    };

    // Index of the best feasible entry under the rule of evaluate_objective, nullopt if none is feasible
    std::optional<std::size_t> best_entry(const std::vector<SweepEntry> &entries);

    // Max-min secrecy over the candidate sets and tau grid subject to the average-rate floor.
    // Ties (within objective_tie_tolerance) go to the smaller set, then the smaller tau, then the earlier candidate.
    // Throws Infeasible when no pair meets r_min.
    ObjectiveResult evaluate_objective(const PermutationTable &table, const std::vector<PermutationSet> &candidates,
                                       const std::vector<std::size_t> &tau_grid, std::size_t delta, double r_min);
}
