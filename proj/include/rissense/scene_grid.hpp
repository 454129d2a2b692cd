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

#include <optional>
#include <utility>
#include <vector>

#include "rissense/geometry.hpp"

namespace rissense {

// Rectangular grid of sensing directions, built by projecting an
// endpoint-inclusive uniform lattice on the image plane y = 1 back onto the
// unit sphere (pinhole model). Row v = 0 is the top of the image (largest z),
// column h = 0 the left edge (most negative x); directions are stored
// row-major with h running fastest, so entry m = v*nbar_h + h.
struct SceneGrid {
    double fov = 0.0;     // full horizontal field of view [rad]
    double aspect = 1.0;  // image plane width / height
    int nbar_h = 0;       // grid columns
    int nbar_v = 0;       // grid rows
    std::vector<Direction> directions;

    int point_count() const { return nbar_h * nbar_v; }

    const Direction& at(int v, int h) const
    {
        return directions[static_cast<std::size_t>(v) * nbar_h + h];
    }
};

// Throws DegenerateGrid unless 0 < fov < pi, aspect > 0 and both axis counts
// are >= 1. An axis with a single point collapses to the image center.
SceneGrid build_grid(double fov, double aspect, int nbar_h, int nbar_v);

// Grid cell whose lattice point is nearest to the given direction's image
// plane intersection, or nullopt when the direction points outside the grid
// footprint (or away from the image plane). Boundary ties go to the lower
// index. A single-point axis owns the whole axis.
std::optional<std::pair<int, int>> owning_pixel(const SceneGrid& grid, const Vec3& dir);

} // namespace rissense
