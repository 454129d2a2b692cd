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

#include "rissense/errors.hpp"
#include "rissense/scene_grid.hpp"

namespace rissense {

// Dense real matrix, row-major.
struct RealMat {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    RealMat() = default;
    RealMat(int r, int c, double fill = 0.0)
        : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, fill)
    {
    }

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
};

// Per-pixel scene depth [m] along the array's broadside axis, sampled on a
// sensing grid. Row/column order follows the grid (row 0 on top).
struct DepthMap {
    RealMat values;
    SceneGrid grid; // grid the map was sampled on (kept through upscaling)

    int rows() const { return values.rows; }
    int cols() const { return values.cols; }
    double& at(int v, int h) { return values.at(v, h); }
    double at(int v, int h) const { return values.at(v, h); }
};

enum class Interp {
    Nearest,
    Bilinear,
};

// Resample to out_h x out_w pixels (pixel-center sampling). Output must be
// at least as large as the input on both axes, else DimensionMismatch.
DepthMap upscale(const DepthMap& map, int out_w, int out_h, Interp interp = Interp::Nearest);

struct ErrorMetrics {
    double rmse = 0.0; // [m]
    double mae = 0.0;  // [m]
};

// Root-mean-square and mean-absolute depth error over all pixels.
// Throws DimensionMismatch unless both maps have identical shape.
ErrorMetrics depth_error(const DepthMap& estimate, const DepthMap& truth);

// 16-bit binary PGM, most significant byte first, levels = depth/meters_per_level
// rounded and clamped to [0, 65535]. The quantization step is recorded in a
// header comment so the image can be mapped back to meters.
void write_pgm16(const DepthMap& map, const std::string& path, double meters_per_level);

// Plain CSV, one image row per line, values in meters with full precision.
void write_depth_csv(const DepthMap& map, const std::string& path);

} // namespace rissense
