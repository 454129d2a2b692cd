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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rissense/depth_map.hpp"
#include "rissense/geometry.hpp"
#include "rissense/scene_grid.hpp"

namespace rissense {

// Point scatterer in the array frame. Must sit in front of the array (y > 0).
struct Target {
    Vec3 position;    // [m]
    double rcs = 1.0; // radar cross-section [m^2]
    int id = 0;       // unique within a scene
};

// One two-way propagation path between the array and a scatterer. For a
// direct bounce the departure and arrival legs coincide; multi-bounce clutter
// arrives from a different direction than it departed.
struct PropagationPath {
    int target_id = 0;
    int path_id = 0;
    Direction depart;      // direction of departure from the array
    Direction arrive;      // direction of arrival back at the array
    double fwd_dist = 0.0; // array-to-scatterer leg [m]
    double bwd_dist = 0.0; // scatterer-to-array leg [m]
    double fwd_loss = 1.0; // linear excess loss >= 1
    double bwd_loss = 1.0;
    double rcs = 1.0;      // effective cross-section [m^2]
};

struct Scene {
    std::vector<Target> targets;
    std::vector<PropagationPath> extra_paths; // injected as-is, e.g. clutter

    bool empty() const { return targets.empty() && extra_paths.empty(); }
};

// One direct path per target (departure = arrival = line of sight, both legs
// equal to the target distance, no excess loss), followed by the scene's
// injected paths. Throws EmptyScene when there is nothing to propagate and
// ValidationError for targets behind the array, duplicate target ids, or
// non-positive rcs.
std::vector<PropagationPath> synthesize_paths(const Scene& scene);

// CSV path list. Column layout (header row required, angles in degrees,
// losses in dB >= 0):
//   target_id,path_id,depart_az_deg,depart_ze_deg,arrive_az_deg,
//   arrive_ze_deg,fwd_dist_m,bwd_dist_m,fwd_loss_db,bwd_loss_db,rcs_m2
// Malformed rows raise ParseError, physically invalid ones ValidationError;
// both carry the 1-based data row number.
std::vector<PropagationPath> load_paths(std::istream& in);
std::vector<PropagationPath> load_paths(const std::string& path);

// Inverse of load_paths with enough digits for an exact round-trip.
void save_paths(std::span<const PropagationPath> paths, const std::string& path);

// Rasterize the scene onto a sensing grid: each pixel takes the depth (y
// coordinate) of the nearest-in-depth target it owns, or background_depth if
// it owns none. Targets outside the grid footprint leave the map untouched.
DepthMap ground_truth_depth(const Scene& scene, const SceneGrid& grid, double background_depth);

} // namespace rissense
