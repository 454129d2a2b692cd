// SPDX-License-Identifier: Apache-2.0
//
// rissense - RIS-aided FMCW radar simulation and scene depth estimation
// Copyright (C) 2026 The rissense authors
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

#include "rissense/geometry.hpp"

#include <algorithm>

namespace rissense {

double wrap_phase(double radians)
{
    double r = std::remainder(radians, kTwoPi); // [-pi, pi]
    if (r <= -kPi)
        r += kTwoPi;
    return r;
}

cplx unit_phasor(double cycles)
{
    double frac = cycles - std::nearbyint(cycles); // [-0.5, 0.5]
    double a = kTwoPi * frac;
    return {std::cos(a), std::sin(a)};
}

Vec3 Vec3::normalized() const
{
    double n = norm();
    if (n == 0.0)
        throw ZeroDistance("cannot normalize the null vector");
    return {x / n, y / n, z / n};
}

Vec3 angles_to_direction(const Direction& dir)
{
    double sz = std::sin(dir.zenith);
    return {std::cos(dir.azimuth) * sz, std::sin(dir.azimuth) * sz, std::cos(dir.zenith)};
}

Direction direction_to_angles(const Vec3& unit)
{
    double n = unit.norm();
    if (std::abs(n - 1.0) > 1e-6)
        throw ValidationError("direction vector is not unit length");

    Direction d;
    d.zenith = std::acos(std::clamp(unit.z / n, -1.0, 1.0));
    d.azimuth = (unit.x == 0.0 && unit.y == 0.0) ? 0.0 : std::atan2(unit.y, unit.x);
    return d;
}

void RisGeometry::validate() const
{
    if (n_h < 1 || n_v < 1)
        throw Error("array needs at least one element per axis");
    if (!(spacing > 0.0))
        throw Error("element spacing must be positive");
    if (!(wavelength > 0.0))
        throw Error("wavelength must be positive");
}

std::vector<Vec3> element_positions(const RisGeometry& geom)
{
    geom.validate();
    std::vector<Vec3> pos;
    pos.reserve(static_cast<std::size_t>(geom.size()));
    for (int iz = 0; iz < geom.n_v; iz++)
        for (int ix = 0; ix < geom.n_h; ix++)
            pos.push_back({ix * geom.spacing, 0.0, iz * geom.spacing});
    return pos;
}

std::vector<double> feed_distances(const RisGeometry& geom)
{
    auto pos = element_positions(geom);
    std::vector<double> delta(pos.size());
    for (std::size_t n = 0; n < pos.size(); n++)
    {
        delta[n] = (geom.feed_position - pos[n]).norm();
        if (delta[n] == 0.0)
            throw ZeroDistance("feed coincides with element " + std::to_string(n));
    }
    return delta;
}

std::vector<cplx> steering_vector(const RisGeometry& geom, const Direction& dir)
{
    geom.validate();
    double ux = std::cos(dir.azimuth) * std::sin(dir.zenith);
    double uz = std::cos(dir.zenith);
    double kd = kTwoPi / geom.wavelength * geom.spacing;

    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(geom.size()));
    for (int iz = 0; iz < geom.n_v; iz++)
        for (int ix = 0; ix < geom.n_h; ix++)
            v.push_back(std::polar(1.0, kd * (ix * ux + iz * uz)));
    return v;
}

} // namespace rissense
