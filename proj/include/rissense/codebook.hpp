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

#include <string>
#include <vector>

#include "rissense/channel.hpp"
#include "rissense/geometry.hpp"
#include "rissense/scene_grid.hpp"

namespace rissense {

// Equal-gain phase profile that focuses the array toward `dir`: conjugate of
// the steering phase combined with the feed channel's phase, so every element
// contribution adds in phase. Entries are unit modulus.
std::vector<cplx> design_vector(const RisGeometry& geom, const FeedChannel& fc,
                                const Direction& dir);

// One phase profile per grid direction, entry m matching grid direction m.
struct Codebook {
    SceneGrid grid;
    std::vector<std::vector<cplx>> psi;

    std::size_t size() const { return psi.size(); }

    // Compact identifier used to tag sweep products.
    std::string id() const;
};

Codebook build_codebook(const RisGeometry& geom, const FeedChannel& fc, const SceneGrid& grid);

// Beam table: m, azimuth and zenith in degrees, one row per entry.
void write_codebook_csv(const Codebook& cb, const std::string& path);

// Raw phase table: per entry, the element phases in radians as little-endian
// float64, entries back to back.
void write_codebook_phases(const Codebook& cb, const std::string& path);

} // namespace rissense
