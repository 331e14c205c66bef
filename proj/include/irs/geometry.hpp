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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace irs
{
    struct Point2
    {
        double x = 0.0, y = 0.0;
        friend bool operator==(const Point2 &, const Point2 &) = default;
    };

    double distance(Point2 a, Point2 b);

    // Everything about a deployment except the node positions. Units are linear SI.
    struct ScenarioTemplate
    {
        std::size_t num_ues = 4;            // K
        std::size_t num_irs = 4;            // N, must satisfy N >= K
        std::size_t m_bs = 32;              // BS antenna count
        std::size_t m_ue = 4;               // UE antenna count
        std::size_t m_mn = 4;               // eavesdropper antenna count
        std::vector<std::size_t> irs_sides; // L_n per IRS; empty means 64 for every IRS
        double wavelength = 3e-3;           // m
        double bandwidth = 1e9;             // Hz
        double tx_power = 1.0;              // W
        double noise_psd = 3.981071705534973e-21; // W/Hz, i.e. -174 dBm/Hz
        std::vector<double> q_weights;      // diagonal of Q; empty means all ones
        std::size_t victim = 0;             // 0-based index of the eavesdropped UE
        double room_size = 10.0;            // side of the square room, m
        double mn_radius = 1.0;             // eavesdropper placement radius around the victim, m

        // Throws ValidationError on any inconsistent field
        void validate() const;
        std::size_t side(std::size_t n) const { return irs_sides.empty() ? 64 : irs_sides[n]; }
        double q_weight(std::size_t k) const { return q_weights.empty() ? 1.0 : q_weights[k]; }
    };

    // A fully placed deployment. The BS sits at the origin of the room [0, room]^2 and the IRSs
    // hang on the northern wall y = room.
    struct Scenario
    {
        ScenarioTemplate params;
        Point2 bs_position{};
        std::vector<Point2> ue_positions;
        std::vector<Point2> irs_positions;
        Point2 mn_position{};

        std::size_t num_ues() const { return ue_positions.size(); }
        std::size_t num_irs() const { return irs_positions.size(); }

        // Checks the template, array sizes, the wall constraint and that BS, UEs and IRSs are distinct.
        // The eavesdropper may share a UE position.
        void validate() const;
    };

    // Builds a scenario from a template: UEs uniform over the room, IRSs at uniform x on the
    // northern wall (sorted, at least one wavelength apart) and the eavesdropper uniform in the
    // disc around the victim, clipped to the room. Deterministic for a given seed.
    Scenario random_scenario(std::uint64_t seed, const ScenarioTemplate &params);

    // An in-plane angle together with its sine; only the sine enters the array response
    struct Angle
    {
        double rad = 0.0;
        double sin = 0.0;
    };

    // Observation angles and link lengths. Every array axis is parallel to x, so the angle of a
    // target seen from an array satisfies sin(angle) = (target.x - array.x) / distance.
    struct LinkAngles
    {
        std::vector<Angle> beta;               // [n] at the BS toward IRS n
        std::vector<Angle> phi1;               // [n] at IRS n toward the BS
        std::vector<std::vector<Angle>> phi2;  // [n][k] at IRS n toward UE k
        std::vector<Angle> phi3;               // [n] at IRS n toward the eavesdropper
        std::vector<std::vector<Angle>> alpha; // [k][n] at UE k toward IRS n
        std::vector<Angle> eta;                // [n] at the eavesdropper toward IRS n
        std::vector<double> d1;                // [n] BS - IRS n
        std::vector<std::vector<double>> d2;   // [n][k] IRS n - UE k
        std::vector<double> d3;                // [n] IRS n - eavesdropper
    };

    // Angle at which an array at `from` observes `to`. Throws DegenerateGeometry if they coincide.
    Angle observation_angle(Point2 from, Point2 to);

    LinkAngles compute_angles(const Scenario &s);
}
