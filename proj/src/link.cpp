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

#include "irs/link.hpp"
#include "irs/errors.hpp"

#include <algorithm>
#include <cmath>

namespace irs
{
    void Permutation::validate(std::size_t num_irs) const
    {
        std::vector<bool> used(num_irs, false);
        for (std::size_t n : assignment)
        {
            if (n >= num_irs)
                throw ValidationError("permutation maps a UE to a non-existent IRS");
            if (used[n])
                throw ValidationError("permutation is not injective");
            used[n] = true;
        }
    }

    EffectiveChannels effective_channels(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                         const Permutation &p)
    {
        const std::size_t n_ue = s.num_ues(), n_irs = s.num_irs(), m_bs = s.params.m_bs;
        if (p.num_ues() != n_ue)
            throw ValidationError("permutation size does not match the number of UEs");
        p.validate(n_irs);

        // Reflection of the BS signal by each active IRS: c1 * (q_out^H Theta p1) is shared by every receiver
        // beyond that IRS, so keep the profile and evaluate the gain per outgoing signature.
        std::vector<IrsProfile> profiles;
        profiles.reserve(n_ue);
        for (std::size_t k = 0; k < n_ue; ++k)
            profiles.push_back(steer_irs(s, angles, p[k], k));

        // Each end-to-end channel is a combination of the BS-side signatures q1 of the active IRSs:
        //   h^H = sum_n [coefficient_n] * q1_n^H   =>   h = sum_n conj(coefficient_n) * q1_n
        auto accumulate = [&](CVector &h, std::size_t n, cplx coefficient)
        {
            const CVector &q1 = ch.h1[n].q;
            const cplx w = std::conj(coefficient);
            for (std::size_t i = 0; i < m_bs; ++i)
                h[i] += w * q1[i];
        };

        EffectiveChannels ec;
        std::vector<CVector> columns(n_ue, CVector(m_bs));
        for (std::size_t k = 0; k < n_ue; ++k)
        {
            const CVector f = signature(angles.alpha[k][p[k]].sin, s.params.m_ue);
            for (std::size_t j = 0; j < n_ue; ++j)
            {
                const std::size_t n = p[j];
                const RankOneChannel &h1 = ch.h1[n], &h2 = ch.h2[n][k];
                const cplx coefficient = h2.a * h2.c * vdot(f, h2.p) * reflection_gain(h2.q, profiles[j], h1.p) *
                                         h1.a * h1.c;
                accumulate(columns[k], n, coefficient);
            }
        }
        ec.h_tilde = CMatrix::from_columns(columns);

        ec.b_tilde.assign(n_irs, CVector(m_bs));
        std::vector<cplx> reflected(n_ue);
        for (std::size_t j = 0; j < n_ue; ++j)
        {
            const std::size_t m = p[j];
            reflected[j] = ch.h3[m].a * ch.h3[m].c * reflection_gain(ch.h3[m].q, profiles[j], ch.h1[m].p) *
                           ch.h1[m].a * ch.h1[m].c;
        }
        for (std::size_t n = 0; n < n_irs; ++n)
        {
            const CVector b = signature(angles.eta[n].sin, s.params.m_mn);
            for (std::size_t j = 0; j < n_ue; ++j)
                accumulate(ec.b_tilde[n], p[j], vdot(b, ch.h3[p[j]].p) * reflected[j]);
        }
        return ec;
    }

    ZfPrecoder zf_precoder(const Scenario &s, const EffectiveChannels &ec)
    {
        const std::size_t n_ue = ec.h_tilde.cols();
        CMatrix g = gram_solve(ec.h_tilde, CMatrix::identity(n_ue));
        for (std::size_t k = 0; k < n_ue; ++k)
        {
            const double root_q = std::sqrt(s.params.q_weight(k));
            for (std::size_t r = 0; r < g.rows(); ++r)
                g(r, k) *= root_q;
        }
        // Normalized by ||G Q^{1/2}||_F so that ||Gamma||_F^2 = P_t. Dividing by the channel norm ||H Q^{1/2}||_F
        // instead would leave the transmit power off budget.
        const double norm = frobenius_norm(g);
        const double scale = std::sqrt(s.params.tx_power) / norm;
        g *= scale;
        return {std::move(g), scale};
    }

    LinkMetrics link_metrics(const Scenario &s, const EffectiveChannels &ec, const ZfPrecoder &zf,
                             const LinkOptions &opts)
    {
        const auto &par = s.params;
        const std::size_t n_ue = ec.h_tilde.cols(), n_irs = ec.b_tilde.size();
        if (!opts.allow_nonidentity_q)
            for (std::size_t k = 0; k < n_ue; ++k)
                if (par.q_weight(k) != 1.0)
                    throw ValidationError("Q != I makes the eavesdropper SINR ambiguous; "
                                          "set allow_nonidentity_q to use the weighted form");

        const double noise = par.noise_psd * par.bandwidth;
        LinkMetrics lm;
        lm.rate.resize(n_ue);
        lm.sinr_ue.resize(n_ue);
        lm.sinr_mn.assign(n_irs, std::vector<double>(n_ue));
        lm.secrecy.assign(n_irs, std::vector<double>(n_ue));

        // Zero-forcing leaves no inter-stream interference: SINR_k = mu^2 q_k / (N0 B)
        for (std::size_t k = 0; k < n_ue; ++k)
        {
            lm.sinr_ue[k] = zf.mu * zf.mu * par.q_weight(k) / noise;
            lm.rate[k] = par.bandwidth * std::log2(1.0 + lm.sinr_ue[k]);
        }

        std::vector<CVector> columns;
        columns.reserve(n_ue);
        for (std::size_t k = 0; k < n_ue; ++k)
            columns.push_back(zf.gamma.col(k));

        for (std::size_t n = 0; n < n_irs; ++n)
        {
            std::vector<double> power(n_ue);
            for (std::size_t h = 0; h < n_ue; ++h)
                power[h] = par.q_weight(h) * std::norm(vdot(ec.b_tilde[n], columns[h]));
            for (std::size_t k = 0; k < n_ue; ++k)
            {
                double interference = 0.0;
                for (std::size_t h = 0; h < n_ue; ++h)
                    if (h != k)
                        interference += power[h];
                const double sinr = power[k] / (interference + noise);
                lm.sinr_mn[n][k] = sinr;
                const double leak = par.bandwidth * std::log2(1.0 + sinr);
                lm.secrecy[n][k] = std::clamp(lm.rate[k] - leak, 0.0, lm.rate[k]);
            }
        }
        return lm;
    }

    LinkMetrics evaluate_permutation(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                     const Permutation &p, const LinkOptions &opts)
    {
        const EffectiveChannels ec = effective_channels(s, ch, angles, p);
        return link_metrics(s, ec, zf_precoder(s, ec), opts);
    }
}
