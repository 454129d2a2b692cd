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

#include "rissense/scene_grid.hpp"

#include <cmath>

namespace rissense {

SceneGrid build_grid(double fov, double aspect, int nbar_h, int nbar_v)
{
    if (!(fov > 0.0) || !(fov < kPi))
        throw DegenerateGrid("field of view must lie in (0, pi)");
    if (!(aspect > 0.0))
        throw DegenerateGrid("aspect ratio must be positive");
    if (nbar_h < 1 || nbar_v < 1)
        throw DegenerateGrid("grid needs at least one point per axis");

    double tx = std::tan(fov / 2.0); // image plane half extent along x
    double tz = tx / aspect;         // and along z

    SceneGrid grid;
    grid.fov = fov;
    grid.aspect = aspect;
    grid.nbar_h = nbar_h;
    grid.nbar_v = nbar_v;
    grid.directions.reserve(static_cast<std::size_t>(nbar_h) * nbar_v);

    for (int v = 0; v < nbar_v; v++)
    {
        double z = (nbar_v == 1) ? 0.0 : tz - v * (2.0 * tz / (nbar_v - 1));
        for (int h = 0; h < nbar_h; h++)
        {
            double x = (nbar_h == 1) ? 0.0 : -tx + h * (2.0 * tx / (nbar_h - 1));
            grid.directions.push_back(direction_to_angles(Vec3{x, 1.0, z}.normalized()));
        }
    }
    return grid;
}

// Nearest lattice index along one axis; ties between two lattice points fall
// to the lower index. Returns -1 outside [0, count).
static int nearest_index(double offset, double step, int count)
{
    if (count == 1)
        return 0;
    int i = static_cast<int>(std::ceil(offset / step - 0.5));
    return (i < 0 || i >= count) ? -1 : i;
}

std::optional<std::pair<int, int>> owning_pixel(const SceneGrid& grid, const Vec3& dir)
{
    if (!(dir.y > 0.0))
        return std::nullopt;

    double x = dir.x / dir.y; // image plane intersection
    double z = dir.z / dir.y;
    double tx = std::tan(grid.fov / 2.0);
    double tz = tx / grid.aspect;

    int h = nearest_index(x + tx, 2.0 * tx / std::max(grid.nbar_h - 1, 1), grid.nbar_h);
    int v = nearest_index(tz - z, 2.0 * tz / std::max(grid.nbar_v - 1, 1), grid.nbar_v);
    if (h < 0 || v < 0)
        return std::nullopt;
    return std::make_pair(v, h);
}

} // namespace rissense
