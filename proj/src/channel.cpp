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

#include "irs/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irs
{
    using std::numbers::pi;

    CMatrix RankOneChannel::matrix() const
    {
        CMatrix m = CMatrix::outer(p, q);
        m *= a * c;
        return m;
    }

    CVector IrsProfile::diagonal() const
    {
        return kron(CVector(side, 1.0), phases);
    }

    CMatrix IrsProfile::theta_matrix() const
    {
        return kron(CMatrix::identity(side), CMatrix::diagonal(phases));
    }

    CVector signature(double sin_beta, std::size_t m)
    {
        if (m == 0)
            throw std::invalid_argument("signature: array size must be positive");
        if (!(std::abs(sin_beta) <= 1.0))
            throw std::invalid_argument("signature: |sin(beta)| must not exceed 1");

        const double md = static_cast<double>(m);
        const cplx centre = std::polar(1.0 / std::sqrt(md), -pi * 0.5 * (md - 1.0) * sin_beta);
        CVector s(m);
        for (std::size_t i = 0; i < m; ++i)
            s[i] = centre * std::polar(1.0, -pi * static_cast<double>(i) * sin_beta);
        return s;
    }

    CVector irs_signature(double sin_phi, std::size_t side)
    {
        CVector s = kron(CVector(side, 1.0), signature(sin_phi, side));
        const double scale = 1.0 / std::sqrt(static_cast<double>(side));
        for (auto &v : s.values())
            v *= scale;
        return s;
    }

    cplx propagation_coeff(double gain, double area, double distance, double wavelength)
    {
        if (!(distance > 0.0) || !(area > 0.0) || !(gain > 0.0) || !(wavelength > 0.0))
            throw std::invalid_argument("propagation_coeff: gain, area, distance and wavelength must be positive");
        return std::polar(std::sqrt(gain * area / (4.0 * pi * distance * distance)),
                          2.0 * pi * distance / wavelength);
    }

    double irs_area(std::size_t side, double wavelength)
    {
        const double l = static_cast<double>(side);
        return l * l * wavelength * wavelength / 4.0;
    }

    ChannelSet build_channels(const Scenario &s, const LinkAngles &angles)
    {
        const auto &par = s.params;
        const std::size_t n_irs = s.num_irs(), n_ue = s.num_ues();
        const double lambda = par.wavelength;

        ChannelSet ch;
        ch.h1.reserve(n_irs);
        ch.h2.assign(n_irs, {});
        ch.h3.reserve(n_irs);
        for (std::size_t n = 0; n < n_irs; ++n)
        {
            const std::size_t side = par.side(n);
            const double area = irs_area(side, lambda);

            ch.h1.push_back({1.0,
                             propagation_coeff(double(par.m_bs), area, angles.d1[n], lambda),
                             irs_signature(angles.phi1[n].sin, side),
                             signature(angles.beta[n].sin, par.m_bs)});

            ch.h2[n].reserve(n_ue);
            for (std::size_t k = 0; k < n_ue; ++k)
                ch.h2[n].push_back({1.0,
                                    propagation_coeff(double(par.m_ue), area, angles.d2[n][k], lambda),
                                    signature(angles.alpha[k][n].sin, par.m_ue),
                                    irs_signature(angles.phi2[n][k].sin, side)});

            ch.h3.push_back({1.0,
                             propagation_coeff(double(par.m_mn), area, angles.d3[n], lambda),
                             signature(angles.eta[n].sin, par.m_mn),
                             irs_signature(angles.phi3[n].sin, side)});
        }
        return ch;
    }

    IrsProfile irs_profile(double steering, std::size_t side, double common_phase)
    {
        IrsProfile prof;
        prof.steering = steering;
        prof.common_phase = common_phase;
        prof.side = side;
        prof.phases = CVector(side);
        const double centre = 0.5 * (static_cast<double>(side) - 1.0);
        for (std::size_t l = 0; l < side; ++l)
            prof.phases[l] = std::polar(1.0, pi * steering * (static_cast<double>(l) - centre) + common_phase);
        return prof;
    }

    IrsProfile steer_irs(const Scenario &s, const LinkAngles &angles, std::size_t n, std::size_t k)
    {
        if (n >= s.num_irs() || k >= s.num_ues())
            throw std::out_of_range("steer_irs: IRS or UE index out of range");
        return irs_profile(angles.phi1[n].sin - angles.phi2[n][k].sin, s.params.side(n));
    }

    cplx reflection_gain(const CVector &q_out, const IrsProfile &profile, const CVector &p_in)
    {
        const std::size_t side = profile.side;
        if (q_out.size() != side * side || p_in.size() != side * side)
            throw std::invalid_argument("reflection_gain: signature length does not match the IRS");
        cplx acc{};
        for (std::size_t i = 0; i < q_out.size(); ++i)
            acc += std::conj(q_out[i]) * profile.phases[i % side] * p_in[i];
        return acc;
    }
}
