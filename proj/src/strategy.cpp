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

#include "irs/strategy.hpp"
#include "irs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <tuple>

namespace irs
{
    std::optional<std::size_t> permutation_count(std::size_t n, std::size_t k, std::size_t limit)
    {
        if (k > n)
            return 0;
        std::size_t count = 1;
        for (std::size_t i = 0; i < k; ++i)
        {
            const std::size_t factor = n - i;
            if (count > limit / factor)
                return std::nullopt;
            count *= factor;
        }
        if (count > limit)
            return std::nullopt;
        return count;
    }

    std::vector<Permutation> enumerate_permutations(std::size_t n, std::size_t k, std::size_t limit)
    {
        if (k > n)
            throw ValidationError("cannot map more UEs than there are IRSs");
        const auto count = permutation_count(n, k, limit);
        if (!count)
            throw SizeLimit("more than " + std::to_string(limit) + " permutations for N=" + std::to_string(n) +
                            ", K=" + std::to_string(k));

        std::vector<Permutation> out;
        out.reserve(*count);
        std::vector<std::size_t> current;
        std::vector<bool> used(n, false);
        current.reserve(k);

        // Depth-first over positions in increasing IRS order yields lexicographic output
        auto recurse = [&](auto &&self) -> void
        {
            if (current.size() == k)
            {
                out.push_back({current});
                return;
            }
            for (std::size_t irs = 0; irs < n; ++irs)
            {
                if (used[irs])
                    continue;
                used[irs] = true;
                current.push_back(irs);
                self(self);
                current.pop_back();
                used[irs] = false;
            }
        };
        recurse(recurse);
        return out;
    }

    double PermutationTable::sum_rate(std::size_t i) const
    {
        const auto &r = metrics[i].rate;
        return std::accumulate(r.begin(), r.end(), 0.0);
    }

    PermutationTable evaluate_all(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                  const LinkOptions &opts)
    {
        PermutationTable t;
        t.num_ues = s.num_ues();
        t.num_irs = s.num_irs();
        t.perms = enumerate_permutations(t.num_irs, t.num_ues);
        t.metrics.reserve(t.perms.size());
        for (const auto &p : t.perms)
            t.metrics.push_back(evaluate_permutation(s, ch, angles, p, opts));
        return t;
    }

    std::string_view to_string(SelectionMethod m)
    {
        switch (m)
        {
        case SelectionMethod::best_rate:
            return "best_rate";
        case SelectionMethod::uniform_irs:
            return "uniform_irs";
        case SelectionMethod::random:
            return "random";
        case SelectionMethod::explicit_list:
            return "explicit";
        }
        return "unknown";
    }

    SelectionMethod parse_selection_method(std::string_view name)
    {
        for (auto m : {SelectionMethod::best_rate, SelectionMethod::uniform_irs, SelectionMethod::random,
                       SelectionMethod::explicit_list})
            if (to_string(m) == name)
                return m;
        throw ValidationError("unknown selection method '" + std::string(name) + "'");
    }

    PermutationSet make_set(const PermutationTable &table, std::vector<std::size_t> members, SelectionMethod method)
    {
        if (members.empty())
            throw ValidationError("a permutation set cannot be empty");
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw ValidationError("a permutation set cannot contain duplicates");
        if (members.back() >= table.size())
            throw ValidationError("permutation index out of range");
        return {std::move(members), method};
    }

    double UsageMatrix::max() const
    {
        return w_.empty() ? 0.0 : *std::max_element(w_.begin(), w_.end());
    }

    std::size_t UsageMatrix::most_used(std::size_t k) const
    {
        std::size_t best = 0;
        for (std::size_t n = 1; n < irs_; ++n)
            if ((*this)(k, n) > (*this)(k, best))
                best = n;
        return best;
    }

    UsageMatrix usage_matrix(const PermutationTable &table, const PermutationSet &set)
    {
        if (set.members.empty())
            throw ValidationError("usage of an empty permutation set is undefined");
        std::vector<std::size_t> counts(table.num_ues * table.num_irs, 0);
        for (std::size_t i : set.members)
            for (std::size_t k = 0; k < table.num_ues; ++k)
                ++counts[k * table.num_irs + table.perms[i][k]];
        UsageMatrix w(table.num_ues, table.num_irs);
        for (std::size_t k = 0; k < table.num_ues; ++k)
            for (std::size_t n = 0; n < table.num_irs; ++n)
                w(k, n) = static_cast<double>(counts[k * table.num_irs + n]) / static_cast<double>(set.size());
        return w;
    }

    namespace
    {
        void check_size(const PermutationTable &table, std::size_t size)
        {
            if (size == 0 || size > table.size())
                throw ValidationError("set size must lie in [1, " + std::to_string(table.size()) + "]");
        }

        // Indices ordered by decreasing sum rate, lexicographic (= index) order on ties
        std::vector<std::size_t> rate_order(const PermutationTable &table)
        {
            std::vector<std::size_t> order(table.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::vector<double> sums(table.size());
            for (std::size_t i = 0; i < table.size(); ++i)
                sums[i] = table.sum_rate(i);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                             { return sums[a] > sums[b]; });
            return order;
        }

        double mean_over(const PermutationSet &set, auto &&value)
        {
            double acc = 0.0;
            for (std::size_t i : set.members)
                acc += value(i);
            return acc / static_cast<double>(set.size());
        }
    }

    PermutationSet select_best_rate(const PermutationTable &table, std::size_t size)
    {
        check_size(table, size);
        auto order = rate_order(table);
        order.resize(size);
        return make_set(table, std::move(order), SelectionMethod::best_rate);
    }

    PermutationSet select_uniform_irs(const PermutationTable &table, std::size_t size)
    {
        check_size(table, size);

        // Walking candidates in rate order makes the first minimizer the highest-rate one
        const auto order = rate_order(table);
        std::vector<std::size_t> counts(table.num_ues * table.num_irs, 0);
        std::vector<bool> taken(table.size(), false);
        std::vector<std::size_t> chosen;
        std::size_t current_max = 0;

        while (chosen.size() < size)
        {
            std::size_t best = table.size();
            std::size_t best_max = std::numeric_limits<std::size_t>::max();
            for (std::size_t i : order)
            {
                if (taken[i])
                    continue;
                std::size_t m = current_max;
                for (std::size_t k = 0; k < table.num_ues; ++k)
                    m = std::max(m, counts[k * table.num_irs + table.perms[i][k]] + 1);
                if (m < best_max)
                {
                    best_max = m;
                    best = i;
                }
            }
            taken[best] = true;
            chosen.push_back(best);
            current_max = best_max;
            for (std::size_t k = 0; k < table.num_ues; ++k)
                ++counts[k * table.num_irs + table.perms[best][k]];
        }
        return make_set(table, std::move(chosen), SelectionMethod::uniform_irs);
    }

    PermutationSet select_random(const PermutationTable &table, std::size_t size, std::uint64_t seed)
    {
        check_size(table, size);
        std::vector<std::size_t> idx(table.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::mt19937_64 rng(seed);
        // Partial Fisher-Yates
        for (std::size_t i = 0; i < size; ++i)
        {
            std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(size);
        return make_set(table, std::move(idx), SelectionMethod::random);
    }

    std::vector<double> average_rate(const PermutationTable &table, const PermutationSet &set, std::size_t tau)
    {
        if (tau < 1)
            throw ValidationError("tau must be at least 1");
        const double duty = static_cast<double>(tau) / static_cast<double>(tau + 1);
        std::vector<double> out(table.num_ues);
        for (std::size_t k = 0; k < table.num_ues; ++k)
            out[k] = duty * mean_over(set, [&](std::size_t i)
                                      { return table.metrics[i].rate[k]; });
        return out;
    }

    double sr_static(const PermutationTable &table, const PermutationSet &set, std::size_t victim)
    {
        const std::size_t target = usage_matrix(table, set).most_used(victim);
        return mean_over(set, [&](std::size_t i)
                         { return table.metrics[i].secrecy[target][victim]; });
    }

    double sr_dynamic(const PermutationTable &table, const PermutationSet &set, std::size_t victim,
                      const SchedulePolicy &policy)
    {
        if (policy.tau < 1 || policy.delta < 1)
            throw ValidationError("tau and delta must be at least 1");
        if (set.members.empty())
            throw ValidationError("secrecy of an empty permutation set is undefined");

        // The scan never completes within a dwell: full secrecy throughout
        if (policy.delta > policy.tau)
            return mean_over(set, [&](std::size_t i)
                             { return table.metrics[i].rate[victim]; });

        const double tau = static_cast<double>(policy.tau), delta = static_cast<double>(policy.delta);
        return mean_over(set, [&](std::size_t i)
                         {
                             const auto &m = table.metrics[i];
                             double worst = m.secrecy[0][victim];
                             for (std::size_t n = 1; n < table.num_irs; ++n)
                                 worst = std::min(worst, m.secrecy[n][victim]);
                             return (tau - delta) / tau * worst + delta / tau * m.rate[victim]; });
    }

    double sr_combined(const PermutationTable &table, const PermutationSet &set, std::size_t victim,
                       const SchedulePolicy &policy)
    {
        return std::min(sr_static(table, set, victim), sr_dynamic(table, set, victim, policy));
    }

    std::vector<SweepEntry> sweep(const PermutationTable &table, const std::vector<PermutationSet> &candidates,
                                  const std::vector<std::size_t> &tau_grid, std::size_t delta, double r_min)
    {
        std::vector<SweepEntry> entries;
        entries.reserve(candidates.size() * tau_grid.size());
        for (std::size_t c = 0; c < candidates.size(); ++c)
        {
            const PermutationSet &set = candidates[c];
            const double usage = usage_matrix(table, set).max();
            std::vector<double> statics(table.num_ues);
            for (std::size_t v = 0; v < table.num_ues; ++v)
                statics[v] = sr_static(table, set, v);

            for (std::size_t tau : tau_grid)
            {
                const SchedulePolicy policy{tau, delta, r_min};
                SweepEntry e;
                e.candidate = c;
                e.set_size = set.size();
                e.tau = tau;
                e.avg_rate = average_rate(table, set, tau);
                e.sr_static = statics;
                e.sr_dynamic.resize(table.num_ues);
                e.sr_combined.resize(table.num_ues);
                for (std::size_t v = 0; v < table.num_ues; ++v)
                {
                    e.sr_dynamic[v] = sr_dynamic(table, set, v, policy);
                    e.sr_combined[v] = std::min(e.sr_static[v], e.sr_dynamic[v]);
                }
                e.max_usage = usage;
                e.feasible = std::all_of(e.avg_rate.begin(), e.avg_rate.end(), [&](double r)
                                         { return r >= r_min; });
                e.score = *std::min_element(e.sr_combined.begin(), e.sr_combined.end());
                entries.push_back(std::move(e));
            }
        }
        return entries;
    }

    std::optional<std::size_t> best_entry(const std::vector<SweepEntry> &entries)
    {
        double top = -std::numeric_limits<double>::infinity();
        for (const auto &e : entries)
            if (e.feasible)
                top = std::max(top, e.score);
        if (!std::isfinite(top))
            return std::nullopt;

        const double floor = top - objective_tie_tolerance * std::abs(top);
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < entries.size(); ++i)
        {
            const auto &e = entries[i];
            if (!e.feasible || e.score < floor)
                continue;
            if (!best)
            {
                best = i;
                continue;
            }
            const auto &b = entries[*best];
            if (std::tie(e.set_size, e.tau, e.candidate) < std::tie(b.set_size, b.tau, b.candidate))
                best = i;
        }
        return best;
    }

    ObjectiveResult evaluate_objective(const PermutationTable &table, const std::vector<PermutationSet> &candidates,
                                       const std::vector<std::size_t> &tau_grid, std::size_t delta, double r_min)
    {
        if (candidates.empty() || tau_grid.empty())
            throw ValidationError("the objective needs at least one candidate set and one tau");

        ObjectiveResult result;
        result.entries = sweep(table, candidates, tau_grid, delta, r_min);

        const auto best = best_entry(result.entries);
        if (!best)
            throw Infeasible("no (set, tau) pair reaches the minimum average rate");
        result.best = *best;
        return result;
    }
}
