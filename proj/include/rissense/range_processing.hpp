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

#include "rissense/complex_mat.hpp"
#include "rissense/depth_map.hpp"
#include "rissense/scene_grid.hpp"
#include "rissense/waveform.hpp"

namespace rissense {

enum class Window {
    Rect,
    Hann,
};

// Range profiles of a receive matrix: per column, the window is applied over
// fast time and a unitary DFT (forward, scaled by 1/sqrt(n)) maps samples to
// range bins.
struct RangeProfile {
    CMat bins; // m_sample x M
};

RangeProfile range_profile(const SensingMatrix& sm, Window window = Window::Rect,
                           int workers = 0);

// Per-beam range estimate: bin of largest magnitude (ties to the smaller
// bin) times the range resolution.
std::vector<double> scene_range(const RangeProfile& rp, double range_res);

// Reshape per-beam ranges to the grid layout, entry m landing at row
// m / nbar_h, column m % nbar_h. Throws DimensionMismatch on a size mismatch.
RealMat range_map(std::span<const double> ranges, int nbar_h, int nbar_v);

// Convert beam ranges to depth along the broadside axis: subtract the feed
// leg, clamp at zero, and project onto +y with the beam direction's y
// component.
DepthMap range_to_depth(const RealMat& ranges, const SceneGrid& grid, double delta1);

} // namespace rissense
