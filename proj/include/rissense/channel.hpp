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

#include <span>
#include <vector>

#include "rissense/geometry.hpp"
#include "rissense/scene.hpp"

namespace rissense {

enum class FeedPatternKind {
    Isotropic,          // unit gain everywhere
    FixedGainTowardRis, // flat peak_gain across the array aperture
};

// Feed antenna radiation pattern. Both kinds illuminate every array element
// with the same gain, so the normalized element channel is pattern free; the
// gain enters through the two-hop path amplitudes.
struct AntennaPattern {
    FeedPatternKind kind = FeedPatternKind::FixedGainTowardRis;
    double peak_gain = 1.0; // linear power gain

    static AntennaPattern from_dbi(double dbi,
                                   FeedPatternKind kind = FeedPatternKind::FixedGainTowardRis)
    {
        return {kind, db2lin(dbi)};
    }

    double gain() const { return kind == FeedPatternKind::Isotropic ? 1.0 : peak_gain; }
};

// Array element pattern; isotropic with a flat linear power gain.
struct ElementPattern {
    double gain = 1.0;
};

struct Patterns {
    AntennaPattern feed;
    ElementPattern element;
};

// Near-field feed-to-array channel, normalized to the reference element:
// entry n has magnitude delta[0]/delta[n] and phase -2*pi*(delta[n]-delta[0])
// per wavelength, so g[0] == 1 exactly.
struct FeedChannel {
    std::vector<cplx> g;
    std::vector<double> delta; // feed-to-element distances [m]
    double delta1 = 0.0;       // distance to the reference element [m]

    int size() const { return static_cast<int>(g.size()); }
};

// Single entry of the normalized feed channel for a given element distance.
cplx feed_entry(double delta_n, double delta1, double wavelength);

FeedChannel feed_channel(const RisGeometry& geom, const Patterns& patterns);

// Complex amplitude of the transmitter-to-scatterer hop: magnitude
// sqrt(G*zeta / ((4*pi)^2 * delta1^2 * fwd_dist^2 * fwd_loss)) and phase
// -2*pi*(delta1 + fwd_dist)/wavelength, with G the feed gain and zeta the
// element gain.
cplx forward_gain(const PropagationPath& path, double delta1, double wavelength,
                  const Patterns& patterns);

// Scatterer-to-receiver hop: magnitude
// sqrt(rcs*zeta*G*wavelength^2 / ((4*pi)^3 * bwd_dist^2 * delta1^2 * bwd_loss))
// and phase -2*pi*(bwd_dist + delta1)/wavelength.
cplx backward_gain(const PropagationPath& path, double delta1, double wavelength,
                   const Patterns& patterns);

// End-to-end path amplitude under the phase profile psi:
//   forward_gain * sum_n (g psi)_n v(depart)_n  *  backward_gain * sum_n (g psi)_n v(arrive)_n
// Throws DimensionMismatch unless psi matches the array size.
cplx path_gain(const PropagationPath& path, std::span<const cplx> psi, const FeedChannel& fc,
               const RisGeometry& geom, const Patterns& patterns);

// Same arithmetic with caller-supplied steering vectors (they must equal
// steering_vector(geom, path.depart/arrive); useful when sweeping many phase
// profiles over fixed paths).
cplx path_gain_cached(const PropagationPath& path, std::span<const cplx> psi,
                      const FeedChannel& fc, double wavelength, const Patterns& patterns,
                      std::span<const cplx> v_depart, std::span<const cplx> v_arrive);

} // namespace rissense
