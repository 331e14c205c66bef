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

// Test-only reference computations. Nothing here calls into the channel, link or strategy
// code paths it is used to check; only the CMatrix container and its products are shared.

#pragma once

#include "irs/experiment.hpp"
#include "irs/geometry.hpp"
#include "irs/link.hpp"
#include "irs/numerics.hpp"
#include "irs/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

namespace oracle
{
    using irs::CMatrix;
    using irs::cplx;
    constexpr double pi = std::numbers::pi;

    // Array response written out element by element as a dense column
    inline CMatrix ula(double sin_b, std::size_t m)
    {
        CMatrix v(m, 1);
        for (std::size_t i = 1; i <= m; ++i)
            v(i - 1, 0) = std::exp(cplx(0.0, -pi / 2.0 * double(m - 1) * sin_b)) *
                          std::exp(cplx(0.0, -pi * double(i - 1) * sin_b)) / std::sqrt(double(m));
        return v;
    }

    // L x L surface: element (a, l) at row a * L + l carries the ULA phase of column l
    inline CMatrix upa(double sin_b, std::size_t side)
    {
        const CMatrix line = ula(sin_b, side);
        CMatrix v(side * side, 1);
        for (std::size_t a = 0; a < side; ++a)
            for (std::size_t l = 0; l < side; ++l)
                v(a * side + l, 0) = line(l, 0) / std::sqrt(double(side));
        return v;
    }

    inline cplx coefficient(double gain, double side, double lambda, double d)
    {
        const double area = side * side * lambda * lambda / 4.0;
        return std::sqrt(gain * area / (4.0 * pi * d * d)) * std::exp(cplx(0.0, 2.0 * pi * d / lambda));
    }

    inline double sin_toward(irs::Point2 from, irs::Point2 to)
    {
        return (to.x - from.x) / std::hypot(to.x - from.x, to.y - from.y);
    }

    // Dense c * p * q^H built entry by entry
    inline CMatrix rank_one(cplx c, const CMatrix &p, const CMatrix &q)
    {
        CMatrix h(p.rows(), q.rows());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < q.rows(); ++j)
                h(i, j) = c * p(i, 0) * std::conj(q(j, 0));
        return h;
    }

    // Reflection phases of an IRS steered from the BS toward `target`
    inline std::vector<cplx> steering_phases(irs::Point2 bs, irs::Point2 irs_pos, irs::Point2 target, std::size_t side)
    {
        const double q = sin_toward(irs_pos, bs) - sin_toward(irs_pos, target);
        std::vector<cplx> ph(side);
        for (std::size_t l = 1; l <= side; ++l)
            ph[l - 1] = std::exp(cplx(0.0, pi * q * (double(l) - 1.0 - (double(side) - 1.0) / 2.0)));
        return ph;
    }

    // Rows of the cascade matrix scaled by I (x) diag(phases); applies the dense Theta when requested
    inline CMatrix reflect(const std::vector<cplx> &phases, const CMatrix &h1, bool dense_theta)
    {
        const std::size_t side = phases.size();
        if (dense_theta)
        {
            CMatrix theta(side * side, side * side);
            for (std::size_t a = 0; a < side; ++a)
                for (std::size_t l = 0; l < side; ++l)
                    theta(a * side + l, a * side + l) = phases[l];
            return theta * h1;
        }
        CMatrix out = h1;
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c)
                out(r, c) *= phases[r % side];
        return out;
    }

    struct DenseChannels
    {
        CMatrix h_tilde;              // M_BS x K
        std::vector<CMatrix> b_tilde; // [n] M_BS x 1
    };

    // Full dense cascade: f^H * sum_n H2 Theta H1 with every matrix materialized
    inline DenseChannels dense_effective_channels(const irs::Scenario &s, const irs::Permutation &p,
                                                  bool dense_theta = false)
    {
        const auto &par = s.params;
        const std::size_t K = s.num_ues(), N = s.num_irs();
        const double lambda = par.wavelength;

        std::vector<CMatrix> h1(N), h3(N);
        std::vector<std::vector<CMatrix>> h2(N, std::vector<CMatrix>(K));
        for (std::size_t n = 0; n < N; ++n)
        {
            const auto irs_pos = s.irs_positions[n];
            const double side = double(par.side(n));
            h1[n] = rank_one(coefficient(double(par.m_bs), side, lambda, irs::distance(s.bs_position, irs_pos)),
                             upa(sin_toward(irs_pos, s.bs_position), par.side(n)),
                             ula(sin_toward(s.bs_position, irs_pos), par.m_bs));
            for (std::size_t k = 0; k < K; ++k)
                h2[n][k] = rank_one(coefficient(double(par.m_ue), side, lambda, irs::distance(irs_pos, s.ue_positions[k])),
                                    ula(sin_toward(s.ue_positions[k], irs_pos), par.m_ue),
                                    upa(sin_toward(irs_pos, s.ue_positions[k]), par.side(n)));
            h3[n] = rank_one(coefficient(double(par.m_mn), side, lambda, irs::distance(irs_pos, s.mn_position)),
                             ula(sin_toward(s.mn_position, irs_pos), par.m_mn),
                             upa(sin_toward(irs_pos, s.mn_position), par.side(n)));
        }

        // Theta_n H1_n for every active IRS
        std::vector<CMatrix> reflected(K);
        for (std::size_t j = 0; j < K; ++j)
        {
            const std::size_t n = p[j];
            reflected[j] = reflect(steering_phases(s.bs_position, s.irs_positions[n], s.ue_positions[j], par.side(n)),
                                   h1[n], dense_theta);
        }

        DenseChannels out;
        out.h_tilde = CMatrix(par.m_bs, K);
        for (std::size_t k = 0; k < K; ++k)
        {
            CMatrix total(par.m_ue, par.m_bs);
            for (std::size_t j = 0; j < K; ++j)
                total = total + h2[p[j]][k] * reflected[j];
            const CMatrix f = ula(sin_toward(s.ue_positions[k], s.irs_positions[p[k]]), par.m_ue);
            const CMatrix row = irs::conj_transpose(f) * total; // 1 x M_BS
            for (std::size_t i = 0; i < par.m_bs; ++i)
                out.h_tilde(i, k) = std::conj(row(0, i));
        }
        for (std::size_t n = 0; n < N; ++n)
        {
            CMatrix total(par.m_mn, par.m_bs);
            for (std::size_t j = 0; j < K; ++j)
                total = total + h3[p[j]] * reflected[j];
            const CMatrix b = ula(sin_toward(s.mn_position, s.irs_positions[n]), par.m_mn);
            out.b_tilde.push_back(irs::conj_transpose(irs::conj_transpose(b) * total));
        }
        return out;
    }

    // SINR at UE k from the received-signal model, interference included
    inline double sinr_first_principles(const CMatrix &h_tilde, const CMatrix &gamma, std::size_t k, double noise)
    {
        const CMatrix hg = irs::conj_transpose(h_tilde) * gamma;
        double interference = 0.0;
        for (std::size_t h = 0; h < gamma.cols(); ++h)
            if (h != k)
                interference += std::norm(hg(k, h));
        return std::norm(hg(k, k)) / (interference + noise);
    }

    // Every map {0..k-1} -> {0..n-1}, kept if injective; lexicographic by construction of the counter
    inline std::vector<std::vector<std::size_t>> injective_maps(std::size_t n, std::size_t k)
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> digits(k, 0);
        while (true)
        {
            auto sorted = digits;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                out.push_back(digits);
            std::size_t pos = k;
            while (pos > 0 && ++digits[pos - 1] == n)
                digits[--pos] = 0;
            if (pos == 0)
                break;
        }
        return out;
    }

    // Max over k, n of the fraction of members with perms[m][k] == n
    inline double max_usage(const irs::PermutationTable &t, const std::vector<std::size_t> &members)
    {
        double best = 0.0;
        for (std::size_t k = 0; k < t.num_ues; ++k)
            for (std::size_t n = 0; n < t.num_irs; ++n)
            {
                std::size_t c = 0;
                for (auto m : members)
                    c += t.perms[m].assignment[k] == n;
                best = std::max(best, double(c) / double(members.size()));
            }
        return best;
    }

    // Secrecy objective of one (set, tau) pair, straight from the averaged-rate and eavesdropper formulas
    struct Score
    {
        bool feasible;
        double value;
    };

    inline Score objective_score(const irs::PermutationTable &t, const std::vector<std::size_t> &members,
                                 std::size_t tau, std::size_t delta, double r_min)
    {
        const double P = double(members.size());
        bool feasible = true;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < t.num_ues; ++v)
        {
            double rate_sum = 0.0;
            for (auto m : members)
                rate_sum += t.metrics[m].rate[v];
            if (double(tau) / double(tau + 1) * rate_sum / P < r_min)
                feasible = false;

            // most frequent IRS of the victim, lowest index on ties
            std::vector<std::size_t> count(t.num_irs, 0);
            for (auto m : members)
                ++count[t.perms[m].assignment[v]];
            const std::size_t target = std::size_t(std::max_element(count.begin(), count.end()) - count.begin());

            double st = 0.0, dy = 0.0;
            for (auto m : members)
            {
                const auto &lm = t.metrics[m];
                st += lm.secrecy[target][v];
                double mn = std::numeric_limits<double>::infinity();
                for (std::size_t n = 0; n < t.num_irs; ++n)
                    mn = std::min(mn, lm.secrecy[n][v]);
                dy += delta <= tau ? (double(tau - delta) * mn + double(delta) * lm.rate[v]) / double(tau) : lm.rate[v];
            }
            worst = std::min(worst, std::min(st / P, dy / P));
        }
        return {feasible, worst};
    }

    struct Optimum
    {
        std::vector<std::size_t> members;
        std::size_t tau = 0;
        double score = 0.0;
        bool found = false;
    };

    // Exhaustive max-min over every non-empty subset of the table and every tau in the grid.
    // Scores within a relative 1e-12 are tied; ties go to the smaller set, then the smaller tau,
    // then the earlier subset in bitmask order.
    inline Optimum exhaustive_objective(const irs::PermutationTable &t, const std::vector<std::size_t> &taus,
                                        std::size_t delta, double r_min)
    {
        struct Cand
        {
            std::vector<std::size_t> members;
            std::size_t tau;
            Score s;
        };
        std::vector<Cand> all;
        const std::size_t P = t.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << P); ++mask)
        {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < P; ++i)
                if (mask >> i & 1)
                    members.push_back(i);
            for (auto tau : taus)
                all.push_back({members, tau, objective_score(t, members, tau, delta, r_min)});
        }
        double top = -std::numeric_limits<double>::infinity();
        for (const auto &c : all)
            if (c.s.feasible)
                top = std::max(top, c.s.value);
        Optimum best;
        if (!std::isfinite(top))
            return best;
        for (const auto &c : all)
        {
            if (!c.s.feasible || c.s.value < top - 1e-12 * std::abs(top))
                continue;
            if (!best.found || std::tuple(c.members.size(), c.tau) < std::tuple(best.members.size(), best.tau))
                best = {c.members, c.tau, c.s.value, true};
        }
        return best;
    }

    // Reference-deployment template with an optional override of the IRS side
    inline irs::ScenarioTemplate reference_template(std::size_t K = 4, std::size_t N = 4, std::size_t side = 64)
    {
        irs::ScenarioTemplate t;
        t.num_ues = K;
        t.num_irs = N;
        t.irs_sides.assign(N, side);
        return t;
    }

    struct Built
    {
        irs::Scenario scenario;
        irs::LinkAngles angles;
        irs::ChannelSet channels;
        irs::PermutationTable table;
    };

    inline Built build(const irs::Scenario &s)
    {
        Built b{s, irs::compute_angles(s), {}, {}};
        b.channels = irs::build_channels(b.scenario, b.angles);
        b.table = irs::evaluate_all(b.scenario, b.channels, b.angles);
        return b;
    }

    inline Built build(std::uint64_t seed, const irs::ScenarioTemplate &t)
    {
        return build(irs::random_scenario(seed, t));
    }
}
