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

#include "irs/channel.hpp"
#include "irs/geometry.hpp"
#include "irs/numerics.hpp"

#include <cstddef>
#include <vector>

namespace irs
{
    // Injective UE -> IRS assignment; assignment[k] is the IRS serving UE k
    struct Permutation
    {
        std::vector<std::size_t> assignment;

        std::size_t num_ues() const { return assignment.size(); }
        std::size_t operator[](std::size_t k) const { return assignment[k]; }

        // Throws ValidationError unless the map is injective into [0, num_irs)
        void validate(std::size_t num_irs) const;

        friend bool operator==(const Permutation &, const Permutation &) = default;
        friend auto operator<=>(const Permutation &, const Permutation &) = default;
    };

    struct EffectiveChannels
    {
        CMatrix h_tilde;               // M_BS x K, column k is the end-to-end channel of UE k
        std::vector<CVector> b_tilde;  // [n] eavesdropper channel when its beam points at IRS n
    };

    struct ZfPrecoder
    {
        CMatrix gamma; // M_BS x K, ||gamma||_F^2 = P_t
        double mu = 0; // H^H gamma = mu Q^{1/2}
    };

    struct LinkMetrics
    {
        std::vector<double> rate;                  // [k] bit/s
        std::vector<double> sinr_ue;               // [k]
        std::vector<std::vector<double>> sinr_mn;  // [n][k]
        std::vector<std::vector<double>> secrecy;  // [n][k] bit/s, within [0, rate[k]]
    };

    struct LinkOptions
    {
        // The eavesdropper SINR weights each stream by q_k although the precoder columns already
        // carry Q^{1/2}. With Q = I this is moot; otherwise the weighted form is only used on request.
        bool allow_nonidentity_q = false;
    };

    // UE k beams toward IRS p[k]; each active IRS is steered at the UE it serves, idle IRSs do not reflect.
    EffectiveChannels effective_channels(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                         const Permutation &p);

    // Gamma = sqrt(P_t) G Q^{1/2} / ||G Q^{1/2}||_F with G = H (H^H H)^{-1}.
    // The normalization uses the pseudo-inverse so that the power constraint holds with equality.
    ZfPrecoder zf_precoder(const Scenario &s, const EffectiveChannels &ec);

    LinkMetrics link_metrics(const Scenario &s, const EffectiveChannels &ec, const ZfPrecoder &zf,
                             const LinkOptions &opts = {});

    // effective_channels -> zf_precoder -> link_metrics
    LinkMetrics evaluate_permutation(const Scenario &s, const ChannelSet &ch, const LinkAngles &angles,
                                     const Permutation &p, const LinkOptions &opts = {});
}
