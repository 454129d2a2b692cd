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

#include <cstdint>
#include <string>
#include <vector>

#include "rissense/depth_map.hpp"
#include "rissense/range_processing.hpp"
#include "rissense/scene.hpp"
#include "rissense/waveform.hpp"

namespace rissense {

// Mirrors the "ris" block of the run configuration file.
struct RisConfig {
    int n_h = 1;
    int n_v = 1;
    double spacing_m = 0.0; // 0 = half the carrier wavelength
    Vec3 feed_position_m{0.0, -0.3, 0.0};
    double feed_gain_dbi = 25.0;
    double element_gain_dbi = 0.0;
};

struct GridConfig {
    double fov_deg = 100.0;
    double aspect = 1.0;
    int oversampling = 1; // grid points per array element per axis
};

struct SceneConfig {
    std::vector<Target> targets;
    std::vector<PropagationPath> paths; // injected in addition to targets
    std::string paths_file;             // exclusive with inline targets/paths
};

struct ProcessingConfig {
    Window window = Window::Rect;
    Interp interp = Interp::Nearest;
    int upscale_w = 0; // 0 = no upscaling
    int upscale_h = 0;
    double background_depth_m = 0.0; // 0 = maximum unambiguous range
};

struct OutputConfig {
    std::string depth_pgm;
    std::string depth_csv;
    std::string metrics_json;
    std::string z_dump;
};

// Versioned run description, loaded from JSON.
struct RunConfig {
    int schema_version = 1;
    std::uint64_t seed = 0;
    int workers = 0; // 0 = hardware concurrency
    RadarConfig radar;
    RisConfig ris;
    GridConfig grid;
    SceneConfig scene;
    ProcessingConfig proc;
    OutputConfig outputs;
};

// Parses a config file (JSON, // comments allowed). Unknown keys and type
// errors raise ConfigError; values are not range checked here, see
// validate_run_config.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text, const std::string& origin = "config");

// All detected rule violations in human-readable form; empty means the
// config is runnable.
std::vector<std::string> validate_run_config(const RunConfig& cfg);

} // namespace rissense
