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

#include "irs/geometry.hpp"
#include "irs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace irs
{
    double distance(Point2 a, Point2 b)
    {
        return std::hypot(b.x - a.x, b.y - a.y);
    }

    void ScenarioTemplate::validate() const
    {
        auto require = [](bool ok, const char *what)
        {
            if (!ok)
                throw ValidationError(what);
        };
        require(num_ues >= 1, "at least one UE is required");
        require(num_ues <= num_irs, "the number of IRSs must be at least the number of UEs");
        require(m_bs >= 1 && m_ue >= 1 && m_mn >= 1, "antenna counts must be positive");
        require(irs_sides.empty() || irs_sides.size() == num_irs, "irs_sides must list one side per IRS");
        require(std::all_of(irs_sides.begin(), irs_sides.end(), [](std::size_t l)
                            { return l >= 1; }),
                "IRS sides must be positive");
        require(wavelength > 0.0 && std::isfinite(wavelength), "wavelength must be positive");
        require(bandwidth > 0.0 && std::isfinite(bandwidth), "bandwidth must be positive");
        require(tx_power > 0.0 && std::isfinite(tx_power), "transmit power must be positive");
        require(noise_psd > 0.0 && std::isfinite(noise_psd), "noise PSD must be positive");
        require(q_weights.empty() || q_weights.size() == num_ues, "q_weights must list one weight per UE");
        require(std::all_of(q_weights.begin(), q_weights.end(), [](double q)
                            { return q > 0.0 && std::isfinite(q); }),
                "q_weights must be positive");
        require(victim < num_ues, "victim index out of range");
        require(room_size > 0.0 && std::isfinite(room_size), "room size must be positive");
        require(mn_radius >= 0.0 && std::isfinite(mn_radius), "eavesdropper radius must be non-negative");
    }

    void Scenario::validate() const
    {
        params.validate();
        if (ue_positions.size() != params.num_ues || irs_positions.size() != params.num_irs)
            throw ValidationError("position lists do not match the template sizes");

        for (const auto &p : irs_positions)
            if (p.y != params.room_size)
                throw ValidationError("IRS positions must lie on the northern wall");

        std::vector<Point2> nodes{bs_position};
        nodes.insert(nodes.end(), ue_positions.begin(), ue_positions.end());
        nodes.insert(nodes.end(), irs_positions.begin(), irs_positions.end());
        for (std::size_t i = 0; i < nodes.size(); ++i)
        {
            if (!std::isfinite(nodes[i].x) || !std::isfinite(nodes[i].y))
                throw ValidationError("positions must be finite");
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (nodes[i] == nodes[j])
                    throw ValidationError("BS, UE and IRS positions must be distinct");
        }
        for (const auto &p : irs_positions)
            if (p == mn_position)
                throw ValidationError("the eavesdropper cannot sit on an IRS");
        if (mn_position == bs_position)
            throw ValidationError("the eavesdropper cannot sit on the BS");
    }

    Scenario random_scenario(std::uint64_t seed, const ScenarioTemplate &params)
    {
        params.validate();

        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coord(0.0, params.room_size);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        Scenario s;
        s.params = params;
        s.bs_position = {0.0, 0.0};

        s.ue_positions.reserve(params.num_ues);
        for (std::size_t k = 0; k < params.num_ues; ++k)
        {
            const double x = coord(rng);
            const double y = coord(rng);
            s.ue_positions.push_back({x, y});
        }

        constexpr int max_attempts = 10000;
        std::vector<double> xs(params.num_irs);
        bool placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt)
        {
            for (auto &x : xs)
                x = coord(rng);
            std::sort(xs.begin(), xs.end());
            placed = true;
            for (std::size_t n = 1; n < xs.size(); ++n)
                if (xs[n] - xs[n - 1] < params.wavelength)
                    placed = false;
        }
        if (!placed)
            throw PlacementFailure("could not place " + std::to_string(params.num_irs) +
                                   " IRSs with minimum spacing after " + std::to_string(max_attempts) + " attempts");
        for (double x : xs)
            s.irs_positions.push_back({x, params.room_size});

        // Uniform in the disc, then projected onto the room; projection never increases the distance to the victim.
        // Near the BS corner the projection can land on the BS itself, in which case the draw is repeated.
        const Point2 victim = s.ue_positions[params.victim];
        auto on_node = [&](Point2 p)
        { return p == s.bs_position || std::find(s.irs_positions.begin(), s.irs_positions.end(), p) != s.irs_positions.end(); };
        placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt)
        {
            const double r = params.mn_radius * std::sqrt(unit(rng));
            const double a = 2.0 * std::numbers::pi * unit(rng);
            s.mn_position = {std::clamp(victim.x + r * std::cos(a), 0.0, params.room_size),
                             std::clamp(victim.y + r * std::sin(a), 0.0, params.room_size)};
            placed = !on_node(s.mn_position);
        }
        if (!placed)
            throw PlacementFailure("could not place the eavesdropper away from the BS and the IRSs");

        s.validate();
        return s;
    }

    Angle observation_angle(Point2 from, Point2 to)
    {
        const double d = distance(from, to);
        if (!(d > 0.0))
            throw DegenerateGeometry("link endpoints coincide at (" + std::to_string(from.x) + ", " +
                                     std::to_string(from.y) + ")");
        const double s = std::clamp((to.x - from.x) / d, -1.0, 1.0);
        return {std::asin(s), s};
    }

    LinkAngles compute_angles(const Scenario &s)
    {
        const std::size_t n_irs = s.num_irs(), n_ue = s.num_ues();
        LinkAngles a;
        a.beta.resize(n_irs);
        a.phi1.resize(n_irs);
        a.phi2.assign(n_irs, std::vector<Angle>(n_ue));
        a.phi3.resize(n_irs);
        a.alpha.assign(n_ue, std::vector<Angle>(n_irs));
        a.eta.resize(n_irs);
        a.d1.resize(n_irs);
        a.d2.assign(n_irs, std::vector<double>(n_ue));
        a.d3.resize(n_irs);

        for (std::size_t n = 0; n < n_irs; ++n)
        {
            const Point2 irs = s.irs_positions[n];
            a.beta[n] = observation_angle(s.bs_position, irs);
            a.phi1[n] = observation_angle(irs, s.bs_position);
            a.d1[n] = distance(s.bs_position, irs);
            for (std::size_t k = 0; k < n_ue; ++k)
            {
                a.phi2[n][k] = observation_angle(irs, s.ue_positions[k]);
                a.alpha[k][n] = observation_angle(s.ue_positions[k], irs);
                a.d2[n][k] = distance(irs, s.ue_positions[k]);
            }
            a.phi3[n] = observation_angle(irs, s.mn_position);
            a.eta[n] = observation_angle(s.mn_position, irs);
            a.d3[n] = distance(irs, s.mn_position);
        }
        return a;
    }
}
