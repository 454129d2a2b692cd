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

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "rissense/errors.hpp"

namespace rissense {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0; // [m/s]
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }
inline double db2lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin2db(double lin) { return 10.0 * std::log10(lin); }

// Wrap an angle to (-pi, pi].
double wrap_phase(double radians);

// exp(j*2*pi*cycles). The cycle count is reduced modulo 1 before the trig
// call, so phases accumulated over many wavelengths keep full precision.
cplx unit_phasor(double cycles);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    // Throws ZeroDistance for the null vector.
    Vec3 normalized() const;
};

// Propagation direction as an azimuth/zenith pair [rad]. Azimuth is measured
// in the x-y plane from the +x axis, zenith from the +z axis. Valid ranges:
// azimuth in (-pi, pi], zenith in [0, pi]. Broadside of the array is
// azimuth = zenith = pi/2, i.e. the +y axis.
struct Direction {
    double azimuth = 0.0;
    double zenith = 0.0;
};

// Unit vector for a direction: (cos(az)sin(ze), sin(az)sin(ze), cos(ze)).
Vec3 angles_to_direction(const Direction& dir);

// Inverse of angles_to_direction. `unit` must have norm 1 within 1e-6.
// At the poles (sin(ze) = 0) azimuth is defined as 0.
Direction direction_to_angles(const Vec3& unit);

// Uniform planar array in the x-z plane. Element (ix, iz) sits at
// (ix*spacing, 0, iz*spacing); the reference element ix = iz = 0 is at the
// origin. Linear element index n = iz*n_h + ix, x running fastest.
struct RisGeometry {
    int n_h = 1;              // elements along x
    int n_v = 1;              // elements along z
    double spacing = 0.0;     // element pitch [m]
    double wavelength = 0.0;  // carrier wavelength [m]
    Vec3 feed_position;       // feed antenna location, array frame [m]

    int size() const { return n_h * n_v; }

    // Throws Error on non-physical parameters.
    void validate() const;
};

// Element positions in linear index order.
std::vector<Vec3> element_positions(const RisGeometry& geom);

// Feed-to-element distances. Throws ZeroDistance if the feed coincides
// with an element.
std::vector<double> feed_distances(const RisGeometry& geom);

// Far-field array response for a plane wave from `dir`. Entry n has phase
// (2*pi/wavelength)*spacing*(ix*cos(az)sin(ze) + iz*cos(ze)), which makes
// the vector the Kronecker product of the vertical and horizontal factors.
std::vector<cplx> steering_vector(const RisGeometry& geom, const Direction& dir);

} // namespace rissense
