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
#include "irs/numerics.hpp"

#include <cstddef>
#include <vector>

namespace irs
{
    // Line-of-sight channel H = a * c * p * q^H between two arrays
    struct RankOneChannel
    {
        double a = 1.0; // large-scale fading, fixed to 1
        cplx c{};       // attenuation and propagation phase
        CVector p;      // receive signature, unit norm
        CVector q;      // transmit signature, unit norm

        // Dense (p.size() x q.size()) matrix form
        CMatrix matrix() const;
    };

    // All channels of a scenario. h2 is indexed [irs][ue].
    struct ChannelSet
    {
        std::vector<RankOneChannel> h1;              // BS -> IRS n
        std::vector<std::vector<RankOneChannel>> h2; // IRS n -> UE k
        std::vector<RankOneChannel> h3;              // IRS n -> eavesdropper
    };

    // Reflection state of one L x L IRS. The phase of meta-atom (l, l') depends on the row index l only.
    struct IrsProfile
    {
        double steering = 0.0;     // q_n
        double common_phase = 0.0; // psi_n
        std::size_t side = 1;      // L_n
        CVector phases;            // exp(j theta_l), l = 0..L-1: the diagonal of Theta_n

        // Diagonal of I_L (x) Theta_n, length L^2
        CVector diagonal() const;
        // Dense L^2 x L^2 reflection matrix. Only sensible for small L.
        CMatrix theta_matrix() const;
    };

    // ULA response of `m` elements at half-wavelength spacing observed from an angle with the given sine
    CVector signature(double sin_beta, std::size_t m);

    // Signature of an L x L planar IRS seen as L stacked identical ULAs; length L^2
    CVector irs_signature(double sin_phi, std::size_t side);

    // sqrt(G A / (4 pi d^2)) * exp(j 2 pi d / lambda)
    cplx propagation_coeff(double gain, double area, double distance, double wavelength);

    // Effective aperture of an L x L IRS with half-wavelength pitch
    double irs_area(std::size_t side, double wavelength);

    ChannelSet build_channels(const Scenario &s, const LinkAngles &angles);

    // Phase profile for a given steering coefficient
    IrsProfile irs_profile(double steering, std::size_t side, double common_phase = 0.0);

    // Profile that reflects the BS signal impinging on IRS n toward UE k
    IrsProfile steer_irs(const Scenario &s, const LinkAngles &angles, std::size_t n, std::size_t k);

    // q_out^H (I (x) Theta) p_in for IRS-sized signatures
    cplx reflection_gain(const CVector &q_out, const IrsProfile &profile, const CVector &p_in);
}
