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

#include "rissense/channel.hpp"

#include <cmath>

namespace rissense {

cplx feed_entry(double delta_n, double delta1, double wavelength)
{
    if (!(delta_n > 0.0) || !(delta1 > 0.0))
        throw ZeroDistance("feed distances must be positive");
    return (delta1 / delta_n) * unit_phasor(-(delta_n - delta1) / wavelength);
}

FeedChannel feed_channel(const RisGeometry& geom, const Patterns& patterns)
{
    if (!(patterns.feed.gain() > 0.0) || !(patterns.element.gain > 0.0))
        throw ValidationError("antenna gains must be positive");

    FeedChannel fc;
    fc.delta = feed_distances(geom);
    fc.delta1 = fc.delta[0];
    fc.g.reserve(fc.delta.size());
    for (double dn : fc.delta)
        fc.g.push_back(feed_entry(dn, fc.delta1, geom.wavelength));
    fc.g[0] = 1.0; // exact by construction, pin it anyway
    return fc;
}

static void check_path(const PropagationPath& path, double delta1, double wavelength)
{
    if (!(path.fwd_dist > 0.0) || !(path.bwd_dist > 0.0))
        throw ValidationError("path legs must be positive");
    if (!(path.fwd_loss >= 1.0) || !(path.bwd_loss >= 1.0))
        throw ValidationError("linear losses must be >= 1");
    if (!(path.rcs > 0.0))
        throw ValidationError("rcs must be positive");
    if (!(delta1 > 0.0))
        throw ZeroDistance("reference feed distance must be positive");
    if (!(wavelength > 0.0))
        throw ValidationError("wavelength must be positive");
}

cplx forward_gain(const PropagationPath& path, double delta1, double wavelength,
                  const Patterns& patterns)
{
    check_path(path, delta1, wavelength);
    double fourpi = 4.0 * kPi;
    double mag = std::sqrt(patterns.feed.gain() * patterns.element.gain /
                           (fourpi * fourpi * delta1 * delta1 * path.fwd_dist * path.fwd_dist *
                            path.fwd_loss));
    return mag * unit_phasor(-(delta1 + path.fwd_dist) / wavelength);
}

cplx backward_gain(const PropagationPath& path, double delta1, double wavelength,
                   const Patterns& patterns)
{
    check_path(path, delta1, wavelength);
    double fourpi = 4.0 * kPi;
    double mag = std::sqrt(path.rcs * patterns.element.gain * patterns.feed.gain() * wavelength *
                           wavelength /
                           (fourpi * fourpi * fourpi * path.bwd_dist * path.bwd_dist * delta1 *
                            delta1 * path.bwd_loss));
    return mag * unit_phasor(-(path.bwd_dist + delta1) / wavelength);
}

cplx path_gain_cached(const PropagationPath& path, std::span<const cplx> psi,
                      const FeedChannel& fc, double wavelength, const Patterns& patterns,
                      std::span<const cplx> v_depart, std::span<const cplx> v_arrive)
{
    std::size_t n = fc.g.size();
    if (psi.size() != n || v_depart.size() != n || v_arrive.size() != n)
        throw DimensionMismatch("phase profile does not match the array size");

    cplx s_dep = 0.0, s_arr = 0.0;
    for (std::size_t i = 0; i < n; i++)
    {
        cplx w = fc.g[i] * psi[i];
        s_dep += w * v_depart[i];
        s_arr += w * v_arrive[i];
    }
    cplx fwd = forward_gain(path, fc.delta1, wavelength, patterns);
    cplx bwd = backward_gain(path, fc.delta1, wavelength, patterns);
    return fwd * s_dep * bwd * s_arr;
}

cplx path_gain(const PropagationPath& path, std::span<const cplx> psi, const FeedChannel& fc,
               const RisGeometry& geom, const Patterns& patterns)
{
    if (static_cast<int>(fc.g.size()) != geom.size())
        throw DimensionMismatch("feed channel does not match the array size");
    auto v_dep = steering_vector(geom, path.depart);
    auto v_arr = steering_vector(geom, path.arrive);
    return path_gain_cached(path, psi, fc, geom.wavelength, patterns, v_dep, v_arr);
}

} // namespace rissense
