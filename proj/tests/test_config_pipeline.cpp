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

#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "rissense/pipeline.hpp"
#include "test_support.hpp"

using namespace rissense;

namespace {

// Small but complete run: 4x4 array, 8x8 beams, one broadside target at 3 m.
RunConfig small_config()
{
    RunConfig cfg;
    cfg.seed = 5;
    cfg.workers = 1;
    cfg.radar = testsup::reference_radar(false);
    cfg.radar.rng_seed = cfg.seed;
    cfg.ris.n_h = 4;
    cfg.ris.n_v = 4;
    cfg.ris.feed_position_m = {0.0, -0.25, 0.0};
    cfg.grid.fov_deg = 50.0;
    cfg.grid.aspect = 1.0;
    cfg.grid.oversampling = 2;
    cfg.scene.targets.push_back({{0.0, 3.0, 0.0}, 1.0, 1});
    return cfg;
}

const char* kConfigText = R"({
  // comments are allowed in config files
  "schema_version": 1,
  "seed": 11,
  "radar": {
    "f0_hz": 60.0e9,
    "slope_hz_per_s": 3.0e14,
    "t_active_s": 13.473684210526316e-6,
    "fs_hz": 38.0e6,
    "m_sample": 512,
    "tx_power_dbm": 20.0,
    "noise_figure_db": 10.0,
    "noise": false
  },
  "ris": {
    "n_h": 4,
    "n_v": 4,
    "feed_position_m": [0.0, -0.25, 0.0],
    "feed_gain_dbi": 25.0
  },
  "grid": {"fov_deg": 50.0, "aspect": 1.0, "oversampling": 2},
  "scene": {"targets": [{"id": 1, "position_m": [0.0, 3.0, 0.0], "rcs_m2": 1.0}]},
  "processing": {"window": "rect", "interp": "nearest"},
  "outputs": {}
})";

} // namespace

TEST_CASE("config parsing fills defaults")
{
    RunConfig cfg = parse_run_config(kConfigText);
    CHECK(cfg.schema_version == 1);
    CHECK(cfg.seed == 11);
    CHECK(cfg.radar.f0 == 60.0e9);
    CHECK(cfg.radar.t_pri == cfg.radar.t_active); // defaulted
    CHECK(cfg.radar.tx_power_mw == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(cfg.radar.rng_seed == 11);
    CHECK(!cfg.radar.noise_enabled);
    CHECK(cfg.ris.spacing_m == 0.0); // half wavelength at run time
    CHECK(cfg.ris.element_gain_dbi == 0.0);
    CHECK(cfg.grid.oversampling == 2);
    REQUIRE(cfg.scene.targets.size() == 1);
    CHECK(cfg.scene.targets[0].position.y == 3.0);
    CHECK(cfg.proc.window == Window::Rect);
    CHECK(cfg.proc.upscale_w == 0);
    CHECK(validate_run_config(cfg).empty());
}

TEST_CASE("config parsing rejects malformed input")
{
    CHECK_THROWS_AS(parse_run_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("{}"), ConfigError); // radar is required

    // Misspelled keys must not be silently dropped.
    std::string typo = kConfigText;
    auto pos = typo.find("fov_deg");
    typo.replace(pos, 7, "fov_dge");
    CHECK_THROWS_AS(parse_run_config(typo), ConfigError);

    std::string vers = kConfigText;
    pos = vers.find("\"schema_version\": 1");
    vers.replace(pos, 19, "\"schema_version\": 2");
    CHECK_THROWS_AS(parse_run_config(vers), ConfigError);

    std::string badwin = kConfigText;
    pos = badwin.find("\"rect\"");
    badwin.replace(pos, 6, "\"boxcar\"");
    CHECK_THROWS_AS(parse_run_config(badwin), ConfigError);
}

TEST_CASE("config validation reports every violation")
{
    RunConfig cfg = small_config();
    CHECK(validate_run_config(cfg).empty());

    cfg.radar.t_pri = cfg.radar.t_active / 2.0;
    cfg.grid.fov_deg = 181.0;
    cfg.scene.targets[0].position.y = -3.0;
    cfg.scene.targets.push_back(cfg.scene.targets[0]); // duplicate id too

    auto bad = validate_run_config(cfg);
    auto has = [&](const char* needle) {
        return std::any_of(bad.begin(), bad.end(), [&](const std::string& s) {
            return s.find(needle) != std::string::npos;
        });
    };
    CHECK(has("repetition interval"));
    CHECK(has("field of view"));
    CHECK(has("duplicate target id"));
    CHECK(has("not in front"));
    CHECK(bad.size() >= 4);
}

TEST_CASE("validation flags empty and conflicting scenes")
{
    RunConfig cfg = small_config();
    cfg.scene.targets.clear();
    auto bad = validate_run_config(cfg);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].find("no targets") != std::string::npos);

    cfg.scene.paths_file = "paths.csv";
    CHECK(validate_run_config(cfg).empty());

    cfg.scene.targets.push_back({{0.0, 2.0, 0.0}, 1.0, 1});
    bad = validate_run_config(cfg);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].find("paths_file excludes") != std::string::npos);
}

TEST_CASE("pipeline recovers a broadside target")
{
    RunConfig cfg = small_config();
    RunResult res = run_pipeline(cfg);

    CHECK(res.beams == 64);
    CHECK(res.path_count == 1);
    REQUIRE(res.depth.rows() == 8);
    REQUIRE(res.depth.cols() == 8);

    SceneGrid grid = build_grid(deg2rad(50.0), 1.0, 8, 8);
    auto px = owning_pixel(grid, Vec3{0.0, 1.0, 0.0});
    REQUIRE(px.has_value());
    CHECK(std::abs(res.depth.at(px->first, px->second) - 3.0) <= res.derived.range_res);

    REQUIRE(res.error.has_value());
    CHECK(res.error->rmse >= res.error->mae);
    CHECK(!res.depth_upscaled.has_value());
    CHECK(!res.error_upscaled.has_value());

    std::string summary = format_summary(cfg, res);
    CHECK(summary.find("beams") != std::string::npos);
    CHECK(summary.find("64") != std::string::npos);
    CHECK(summary.find("range resolution") != std::string::npos);
}

TEST_CASE("pipeline upscaling produces both resolutions")
{
    RunConfig cfg = small_config();
    cfg.proc.upscale_w = 16;
    cfg.proc.upscale_h = 12;
    RunResult res = run_pipeline(cfg);
    REQUIRE(res.depth_upscaled.has_value());
    CHECK(res.depth_upscaled->cols() == 16);
    CHECK(res.depth_upscaled->rows() == 12);
    REQUIRE(res.error.has_value());
    REQUIRE(res.error_upscaled.has_value());
}

TEST_CASE("pipeline writes artifacts only on success")
{
    testsup::TempDir tmp;
    RunConfig cfg = small_config();
    cfg.radar.noise_enabled = true;
    cfg.outputs.depth_pgm = tmp.file("d.pgm");
    cfg.outputs.depth_csv = tmp.file("d.csv");
    cfg.outputs.metrics_json = tmp.file("m.json");
    cfg.outputs.z_dump = tmp.file("z.bin");

    RunResult res = run_pipeline(cfg);
    (void)res;
    for (const char* f : {"d.pgm", "d.csv", "m.json", "z.bin"})
        CHECK(std::filesystem::exists(tmp.file(f)));

    auto metrics = nlohmann::json::parse(testsup::slurp(tmp.file("m.json")));
    CHECK(metrics.at("m") == 64);
    CHECK(metrics.at("nbar_h") == 8);
    CHECK(metrics.at("nbar_v") == 8);
    CHECK(metrics.at("seed") == 5);
    CHECK(metrics.contains("rmse_m"));
    CHECK(metrics.contains("mae_m"));

    // A failing config must not leave artifacts behind.
    testsup::TempDir tmp2;
    RunConfig bad = cfg;
    bad.outputs.depth_pgm = tmp2.file("d.pgm");
    bad.outputs.depth_csv = tmp2.file("d.csv");
    bad.outputs.metrics_json = tmp2.file("m.json");
    bad.outputs.z_dump = tmp2.file("z.bin");
    bad.grid.fov_deg = 0.0;
    CHECK_THROWS_AS(run_pipeline(bad), ConfigError);
    for (const char* f : {"d.pgm", "d.csv", "m.json", "z.bin"})
        CHECK(!std::filesystem::exists(tmp2.file(f)));
}

TEST_CASE("identical runs produce identical artifacts")
{
    testsup::TempDir ta, tb;
    RunConfig cfg = small_config();
    cfg.radar.noise_enabled = true;

    auto run_into = [&](const testsup::TempDir& dir) {
        RunConfig c = cfg;
        c.outputs.depth_pgm = dir.file("d.pgm");
        c.outputs.depth_csv = dir.file("d.csv");
        c.outputs.metrics_json = dir.file("m.json");
        c.outputs.z_dump = dir.file("z.bin");
        run_pipeline(c);
    };
    run_into(ta);
    run_into(tb);
    for (const char* f : {"d.pgm", "d.csv", "m.json", "z.bin"})
        CHECK(testsup::slurp(ta.file(f)) == testsup::slurp(tb.file(f)));
}

TEST_CASE("replay reproduces the original depth map")
{
    testsup::TempDir tmp;
    RunConfig cfg = small_config();
    cfg.radar.noise_enabled = true;
    cfg.outputs.z_dump = tmp.file("z.bin");

    RunResult original = run_pipeline(cfg);

    PipelineOptions opt;
    opt.replay = tmp.file("z.bin");
    RunConfig replay_cfg = cfg;
    replay_cfg.outputs.z_dump.clear();
    RunResult replayed = run_pipeline(replay_cfg, opt);
    CHECK(replayed.depth.values.values == original.depth.values.values);

    // Mismatched geometry cannot consume the dump.
    RunConfig wrong = replay_cfg;
    wrong.grid.oversampling = 1;
    CHECK_THROWS_AS(run_pipeline(wrong, opt), DimensionMismatch);
}

TEST_CASE("pipeline options override the config")
{
    testsup::TempDir tmp;
    RunConfig cfg = small_config();
    cfg.radar.noise_enabled = true;

    PipelineOptions opt;
    opt.seed = 123;
    opt.upscale = {{16, 16}};
    opt.window = Window::Hann;
    opt.interp = Interp::Bilinear;
    opt.z_dump = tmp.file("z.bin");

    RunResult res = run_pipeline(cfg, opt);
    CHECK(res.seed == 123);
    REQUIRE(res.depth_upscaled.has_value());
    CHECK(res.depth_upscaled->cols() == 16);

    ZDump dump = read_z_dump(tmp.file("z.bin"));
    CHECK(dump.seed == 123);

    // Progress callbacks fire in phase order.
    std::vector<std::string> phases;
    PipelineOptions track;
    track.progress = [&](const std::string& s) { phases.push_back(s); };
    run_pipeline(small_config(), track);
    REQUIRE(phases.size() >= 3);
    CHECK(phases[0].find("codebook") != std::string::npos);
    CHECK(phases[1].find("sweeping") != std::string::npos);
    CHECK(phases[2].find("range processing") != std::string::npos);
}

TEST_CASE("scene source can be a paths file")
{
    testsup::TempDir tmp;

    Scene scene;
    scene.targets.push_back({{0.0, 3.0, 0.0}, 1.0, 1});
    auto paths = synthesize_paths(scene);
    save_paths(paths, tmp.file("paths.csv"));

    RunConfig cfg = small_config();
    cfg.scene.targets.clear();
    cfg.scene.paths_file = tmp.file("paths.csv");

    RunResult res = run_pipeline(cfg);
    CHECK(res.path_count == 1);
    CHECK(!res.error.has_value()); // no ground truth without explicit targets

    SceneGrid grid = build_grid(deg2rad(50.0), 1.0, 8, 8);
    auto px = owning_pixel(grid, Vec3{0.0, 1.0, 0.0});
    CHECK(std::abs(res.depth.at(px->first, px->second) - 3.0) <= res.derived.range_res);
}
