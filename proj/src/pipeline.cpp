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

#include "rissense/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rissense {

namespace {

void report(const PipelineOptions& opt, const std::string& msg)
{
    if (opt.progress)
        opt.progress(msg);
}

RunConfig apply_overrides(RunConfig cfg, const PipelineOptions& opt)
{
    if (opt.seed)
    {
        cfg.seed = *opt.seed;
        cfg.radar.rng_seed = *opt.seed;
    }
    if (opt.workers)
        cfg.workers = *opt.workers;
    if (opt.z_dump)
        cfg.outputs.z_dump = *opt.z_dump;
    if (opt.upscale)
    {
        cfg.proc.upscale_w = opt.upscale->first;
        cfg.proc.upscale_h = opt.upscale->second;
    }
    if (opt.window)
        cfg.proc.window = *opt.window;
    if (opt.interp)
        cfg.proc.interp = *opt.interp;
    return cfg;
}

void write_metrics_json(const RunConfig& cfg, const RunResult& res, const std::string& path)
{
    nlohmann::json j;
    j["m"] = res.beams;
    j["nbar_h"] = res.depth.cols();
    j["nbar_v"] = res.depth.rows();
    j["seed"] = res.seed;
    if (res.error)
    {
        j["rmse_m"] = res.error->rmse;
        j["mae_m"] = res.error->mae;
    }
    if (res.error_upscaled && res.depth_upscaled)
    {
        j["upscaled"] = {{"width", res.depth_upscaled->cols()},
                         {"height", res.depth_upscaled->rows()},
                         {"rmse_m", res.error_upscaled->rmse},
                         {"mae_m", res.error_upscaled->mae}};
    }
    (void)cfg;

    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f << j.dump(2) << '\n';
    if (!f)
        throw IoError("write to " + path + " failed");
}

} // namespace

RunResult run_pipeline(const RunConfig& raw_cfg, const PipelineOptions& opt)
{
    RunConfig cfg = apply_overrides(raw_cfg, opt);

    auto violations = validate_run_config(cfg);
    if (!violations.empty())
    {
        std::string msg = "invalid configuration:";
        for (const std::string& v : violations)
            msg += "\n  " + v;
        throw ConfigError(msg);
    }

    RunResult res;
    res.seed = cfg.seed;
    res.derived = derived_params(cfg.radar);
    res.noise_floor_mw = noise_variance_mw(cfg.radar);

    RisGeometry geom;
    geom.n_h = cfg.ris.n_h;
    geom.n_v = cfg.ris.n_v;
    geom.wavelength = cfg.radar.wavelength();
    geom.spacing = cfg.ris.spacing_m > 0.0 ? cfg.ris.spacing_m : geom.wavelength / 2.0;
    geom.feed_position = cfg.ris.feed_position_m;

    Patterns patterns;
    patterns.feed = AntennaPattern::from_dbi(cfg.ris.feed_gain_dbi);
    patterns.element = {db2lin(cfg.ris.element_gain_dbi)};

    FeedChannel fc = feed_channel(geom, patterns);

    int nbar_h = cfg.grid.oversampling * cfg.ris.n_h;
    int nbar_v = cfg.grid.oversampling * cfg.ris.n_v;
    SceneGrid grid = build_grid(deg2rad(cfg.grid.fov_deg), cfg.grid.aspect, nbar_h, nbar_v);

    report(opt, "building codebook (" + std::to_string(grid.point_count()) + " profiles)");
    Codebook cb = build_codebook(geom, fc, grid);
    res.beams = cb.size();

    Scene scene;
    std::vector<PropagationPath> paths;
    if (!cfg.scene.paths_file.empty())
    {
        paths = load_paths(cfg.scene.paths_file);
        if (paths.empty())
            throw EmptyScene("path file " + cfg.scene.paths_file + " holds no paths");
    }
    else
    {
        scene.targets = cfg.scene.targets;
        scene.extra_paths = cfg.scene.paths;
        paths = synthesize_paths(scene);
    }
    res.path_count = paths.size();

    SensingMatrix sm;
    if (opt.replay)
    {
        report(opt, "replaying receive matrix from " + *opt.replay);
        ZDump dump = read_z_dump(*opt.replay);
        if (dump.z.rows != static_cast<std::size_t>(cfg.radar.m_sample) ||
            dump.z.cols != cb.size())
            throw DimensionMismatch("replay dump is " + std::to_string(dump.z.rows) + "x" +
                                    std::to_string(dump.z.cols) + ", config needs " +
                                    std::to_string(cfg.radar.m_sample) + "x" +
                                    std::to_string(cb.size()));
        sm.z = std::move(dump.z);
        sm.config = cfg.radar;
        sm.codebook_id = cb.id();
    }
    else
    {
        report(opt, "sweeping " + std::to_string(paths.size()) + " paths over " +
                        std::to_string(cb.size()) + " beams");
        sm = sweep(paths, cb, fc, geom, patterns, cfg.radar, cfg.workers);
    }

    report(opt, "range processing");
    RangeProfile rp = range_profile(sm, cfg.proc.window, cfg.workers);
    std::vector<double> ranges = scene_range(rp, res.derived.range_res);
    RealMat rmap = range_map(ranges, grid.nbar_h, grid.nbar_v);
    res.depth = range_to_depth(rmap, grid, fc.delta1);

    double background =
        cfg.proc.background_depth_m > 0.0 ? cfg.proc.background_depth_m : res.derived.max_range;
    bool have_truth = !cfg.scene.paths_file.empty() ? false : true;
    if (have_truth)
        res.error = depth_error(res.depth, ground_truth_depth(scene, grid, background));

    if (cfg.proc.upscale_w > 0)
    {
        res.depth_upscaled =
            upscale(res.depth, cfg.proc.upscale_w, cfg.proc.upscale_h, cfg.proc.interp);
        if (have_truth)
        {
            SceneGrid fine = build_grid(deg2rad(cfg.grid.fov_deg), cfg.grid.aspect,
                                        cfg.proc.upscale_w, cfg.proc.upscale_h);
            res.error_upscaled =
                depth_error(*res.depth_upscaled, ground_truth_depth(scene, fine, background));
        }
    }

    // All computation succeeded; only now touch the filesystem.
    const DepthMap& final_map = res.depth_upscaled ? *res.depth_upscaled : res.depth;
    if (!cfg.outputs.z_dump.empty())
    {
        report(opt, "writing " + cfg.outputs.z_dump);
        write_z_dump(sm, cfg.outputs.z_dump);
    }
    if (!cfg.outputs.depth_pgm.empty())
    {
        report(opt, "writing " + cfg.outputs.depth_pgm);
        write_pgm16(final_map, cfg.outputs.depth_pgm, res.derived.max_range / 65535.0);
    }
    if (!cfg.outputs.depth_csv.empty())
    {
        report(opt, "writing " + cfg.outputs.depth_csv);
        write_depth_csv(final_map, cfg.outputs.depth_csv);
    }
    if (!cfg.outputs.metrics_json.empty())
    {
        report(opt, "writing " + cfg.outputs.metrics_json);
        write_metrics_json(cfg, res, cfg.outputs.metrics_json);
    }
    return res;
}

std::string format_summary(const RunConfig& cfg, const RunResult& res)
{
    char line[160];
    std::ostringstream out;
    auto row = [&](const char* key, const char* fmt, auto... args) {
        std::snprintf(line, sizeof(line), fmt, args...);
        char full[200];
        std::snprintf(full, sizeof(full), "%-18s %s\n", key, line);
        out << full;
    };

    row("array", "%d x %d elements", cfg.ris.n_h, cfg.ris.n_v);
    row("beams", "%zu (%d x %d grid)", res.beams, res.depth.cols(), res.depth.rows());
    row("paths", "%zu", res.path_count);
    row("bandwidth", "%.6g GHz", res.derived.bandwidth / 1e9);
    row("range resolution", "%.6g m", res.derived.range_res);
    row("max range", "%.6g m", res.derived.max_range);
    row("chirp rate", "%.6g kHz", res.derived.chirp_rate / 1e3);
    row("map rate", "%.6g Hz", res.derived.map_rate(res.beams));
    if (res.noise_floor_mw > 0.0)
        row("noise floor", "%.4g dBm", lin2db(res.noise_floor_mw));
    else
        row("noise floor", "%s", "disabled");
    row("seed", "%llu", static_cast<unsigned long long>(res.seed));
    if (res.error)
        row("depth error", "rmse %.6g m, mae %.6g m", res.error->rmse, res.error->mae);
    if (res.error_upscaled && res.depth_upscaled)
        row("upscaled error", "rmse %.6g m, mae %.6g m (%d x %d)", res.error_upscaled->rmse,
            res.error_upscaled->mae, res.depth_upscaled->cols(), res.depth_upscaled->rows());
    return out.str();
}

} // namespace rissense
