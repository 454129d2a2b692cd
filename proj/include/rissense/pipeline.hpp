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

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "rissense/run_config.hpp"

namespace rissense {

// Command line overrides applied on top of a run configuration.
struct PipelineOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> z_dump;             // dump the receive matrix here
    std::optional<std::string> replay;             // read it from here instead of sweeping
    std::optional<std::pair<int, int>> upscale;    // width x height
    std::optional<Window> window;
    std::optional<Interp> interp;
    std::function<void(const std::string&)> progress; // phase reports, may be empty
};

struct RunResult {
    DerivedParams derived;
    double noise_floor_mw = 0.0;
    std::size_t beams = 0;
    std::size_t path_count = 0;
    DepthMap depth;                        // at codebook resolution
    std::optional<DepthMap> depth_upscaled;
    std::optional<ErrorMetrics> error;          // against ground truth, codebook grid
    std::optional<ErrorMetrics> error_upscaled; // against ground truth, upscaled grid
    std::uint64_t seed = 0;
};

// Applies overrides, validates, then runs the whole chain: geometry, feed
// channel, codebook, path synthesis, sweep (or replay), range processing,
// depth conversion, metrics, and artifact files. Throws ConfigError listing
// every rule violation before any work or output happens.
RunResult run_pipeline(const RunConfig& cfg, const PipelineOptions& opt = {});

// Derived parameter / result table shown after a run.
std::string format_summary(const RunConfig& cfg, const RunResult& res);

} // namespace rissense
