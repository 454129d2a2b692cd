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

#include "rissense/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace rissense {

using nlohmann::json;

namespace {

// Rejects misspelled keys instead of silently ignoring them.
void check_keys(const json& obj, const char* block, std::initializer_list<const char*> known)
{
    for (const auto& item : obj.items())
    {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k)
            {
                ok = true;
                break;
            }
        if (!ok)
            throw ConfigError(std::string("unknown key '") + item.key() + "' in " + block);
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    return it->get<T>();
}

Vec3 get_vec3(const json& obj, const char* key, Vec3 fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_array() || it->size() != 3)
        throw ConfigError(std::string(key) + " must be an array of three numbers");
    return {(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>()};
}

PropagationPath parse_path(const json& j)
{
    check_keys(j, "scene.paths[]",
               {"target_id", "path_id", "depart_az_deg", "depart_ze_deg", "arrive_az_deg",
                "arrive_ze_deg", "fwd_dist_m", "bwd_dist_m", "fwd_loss_db", "bwd_loss_db",
                "rcs_m2"});
    PropagationPath p;
    p.target_id = get_or(j, "target_id", 0);
    p.path_id = get_or(j, "path_id", 0);
    p.depart = {wrap_phase(deg2rad(j.at("depart_az_deg").get<double>())),
                deg2rad(j.at("depart_ze_deg").get<double>())};
    p.arrive = {wrap_phase(deg2rad(j.at("arrive_az_deg").get<double>())),
                deg2rad(j.at("arrive_ze_deg").get<double>())};
    p.fwd_dist = j.at("fwd_dist_m").get<double>();
    p.bwd_dist = j.at("bwd_dist_m").get<double>();
    p.fwd_loss = db2lin(get_or(j, "fwd_loss_db", 0.0));
    p.bwd_loss = db2lin(get_or(j, "bwd_loss_db", 0.0));
    p.rcs = get_or(j, "rcs_m2", 1.0);
    return p;
}

} // namespace

RunConfig parse_run_config(const std::string& text, const std::string& origin)
{
    json root;
    try
    {
        root = json::parse(text, nullptr, true, true); // allow // comments
    }
    catch (const json::exception& e)
    {
        throw ConfigError(origin + ": " + e.what());
    }

    try
    {
        check_keys(root, "config root",
                   {"schema_version", "seed", "workers", "radar", "ris", "grid", "scene",
                    "processing", "outputs"});

        RunConfig cfg;
        cfg.schema_version = get_or(root, "schema_version", 1);
        if (cfg.schema_version != 1)
            throw ConfigError("unsupported schema_version " +
                              std::to_string(cfg.schema_version));
        cfg.seed = get_or<std::uint64_t>(root, "seed", 0);
        cfg.workers = get_or(root, "workers", 0);

        const json& radar = root.at("radar");
        check_keys(radar, "radar",
                   {"f0_hz", "slope_hz_per_s", "t_active_s", "t_pri_s", "fs_hz", "m_sample",
                    "tx_power_dbm", "noise_figure_db", "noise"});
        cfg.radar.f0 = radar.at("f0_hz").get<double>();
        cfg.radar.slope = radar.at("slope_hz_per_s").get<double>();
        cfg.radar.t_active = radar.at("t_active_s").get<double>();
        cfg.radar.t_pri = get_or(radar, "t_pri_s", cfg.radar.t_active);
        cfg.radar.fs = radar.at("fs_hz").get<double>();
        cfg.radar.m_sample = radar.at("m_sample").get<int>();
        cfg.radar.tx_power_mw = db2lin(get_or(radar, "tx_power_dbm", 0.0));
        cfg.radar.noise_figure_db = get_or(radar, "noise_figure_db", 10.0);
        cfg.radar.noise_enabled = get_or(radar, "noise", true);
        cfg.radar.rng_seed = cfg.seed;

        const json& ris = root.at("ris");
        check_keys(ris, "ris",
                   {"n_h", "n_v", "spacing_m", "feed_position_m", "feed_gain_dbi",
                    "element_gain_dbi"});
        cfg.ris.n_h = ris.at("n_h").get<int>();
        cfg.ris.n_v = ris.at("n_v").get<int>();
        cfg.ris.spacing_m = get_or(ris, "spacing_m", 0.0);
        cfg.ris.feed_position_m = get_vec3(ris, "feed_position_m", {0.0, -0.3, 0.0});
        cfg.ris.feed_gain_dbi = get_or(ris, "feed_gain_dbi", 25.0);
        cfg.ris.element_gain_dbi = get_or(ris, "element_gain_dbi", 0.0);

        const json& grid = root.at("grid");
        check_keys(grid, "grid", {"fov_deg", "aspect", "oversampling"});
        cfg.grid.fov_deg = grid.at("fov_deg").get<double>();
        cfg.grid.aspect = get_or(grid, "aspect", 1.0);
        cfg.grid.oversampling = get_or(grid, "oversampling", 1);

        const json& scene = root.at("scene");
        check_keys(scene, "scene", {"targets", "paths", "paths_file"});
        if (scene.contains("targets"))
            for (const json& t : scene.at("targets"))
            {
                check_keys(t, "scene.targets[]", {"id", "position_m", "rcs_m2"});
                Target tgt;
                tgt.id = t.at("id").get<int>();
                tgt.position = get_vec3(t, "position_m", {});
                tgt.rcs = get_or(t, "rcs_m2", 1.0);
                cfg.scene.targets.push_back(tgt);
            }
        if (scene.contains("paths"))
            for (const json& p : scene.at("paths"))
                cfg.scene.paths.push_back(parse_path(p));
        cfg.scene.paths_file = get_or<std::string>(scene, "paths_file", "");

        if (root.contains("processing"))
        {
            const json& proc = root.at("processing");
            check_keys(proc, "processing",
                       {"window", "interp", "upscale", "background_depth_m"});
            std::string window = get_or<std::string>(proc, "window", "rect");
            if (window == "rect")
                cfg.proc.window = Window::Rect;
            else if (window == "hann")
                cfg.proc.window = Window::Hann;
            else
                throw ConfigError("unknown window '" + window + "'");
            std::string interp = get_or<std::string>(proc, "interp", "nearest");
            if (interp == "nearest")
                cfg.proc.interp = Interp::Nearest;
            else if (interp == "bilinear")
                cfg.proc.interp = Interp::Bilinear;
            else
                throw ConfigError("unknown interp '" + interp + "'");
            if (proc.contains("upscale"))
            {
                const json& up = proc.at("upscale");
                if (!up.is_array() || up.size() != 2)
                    throw ConfigError("upscale must be [width, height]");
                cfg.proc.upscale_w = up[0].get<int>();
                cfg.proc.upscale_h = up[1].get<int>();
            }
            cfg.proc.background_depth_m = get_or(proc, "background_depth_m", 0.0);
        }

        if (root.contains("outputs"))
        {
            const json& out = root.at("outputs");
            check_keys(out, "outputs", {"depth_pgm", "depth_csv", "metrics_json", "z_dump"});
            cfg.outputs.depth_pgm = get_or<std::string>(out, "depth_pgm", "");
            cfg.outputs.depth_csv = get_or<std::string>(out, "depth_csv", "");
            cfg.outputs.metrics_json = get_or<std::string>(out, "metrics_json", "");
            cfg.outputs.z_dump = get_or<std::string>(out, "z_dump", "");
        }
        return cfg;
    }
    catch (const json::exception& e)
    {
        throw ConfigError(origin + ": " + e.what());
    }
}

RunConfig load_run_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_run_config(ss.str(), path);
}

std::vector<std::string> validate_run_config(const RunConfig& cfg)
{
    std::vector<std::string> bad;

    if (!(cfg.radar.f0 > 0.0))
        bad.push_back("radar: start frequency must be positive");
    if (!(cfg.radar.slope > 0.0))
        bad.push_back("radar: chirp slope must be positive");
    if (!(cfg.radar.fs > 0.0))
        bad.push_back("radar: sampling rate must be positive");
    if (cfg.radar.m_sample < 1)
        bad.push_back("radar: need at least one sample per chirp");
    if (!(cfg.radar.t_active > 0.0))
        bad.push_back("radar: active chirp duration must be positive");
    else
    {
        if (cfg.radar.t_active > cfg.radar.t_pri)
            bad.push_back("radar: active chirp exceeds the repetition interval");
        if (cfg.radar.fs > 0.0 && cfg.radar.m_sample >= 1 &&
            cfg.radar.m_sample / cfg.radar.fs > cfg.radar.t_active)
            bad.push_back("radar: ADC window exceeds the active chirp");
    }
    if (!(cfg.radar.tx_power_mw > 0.0))
        bad.push_back("radar: transmit power must be positive");

    if (cfg.ris.n_h < 1 || cfg.ris.n_v < 1)
        bad.push_back("ris: array needs at least one element per axis");
    if (cfg.ris.spacing_m < 0.0)
        bad.push_back("ris: spacing must be >= 0 (0 = half wavelength)");
    if (cfg.ris.feed_position_m.norm() == 0.0)
        bad.push_back("ris: feed cannot sit on the reference element");

    if (!(cfg.grid.fov_deg > 0.0) || !(cfg.grid.fov_deg < 180.0))
        bad.push_back("grid: field of view must lie in (0, 180) degrees");
    if (!(cfg.grid.aspect > 0.0))
        bad.push_back("grid: aspect ratio must be positive");
    if (cfg.grid.oversampling < 1)
        bad.push_back("grid: oversampling must be >= 1");

    if (!cfg.scene.paths_file.empty() &&
        (!cfg.scene.targets.empty() || !cfg.scene.paths.empty()))
        bad.push_back("scene: paths_file excludes inline targets and paths");
    if (cfg.scene.paths_file.empty() && cfg.scene.targets.empty() && cfg.scene.paths.empty())
        bad.push_back("scene: no targets, paths or paths_file given");

    std::unordered_set<int> ids;
    for (const Target& t : cfg.scene.targets)
    {
        if (!ids.insert(t.id).second)
            bad.push_back("scene: duplicate target id " + std::to_string(t.id));
        if (!(t.position.y > 0.0))
            bad.push_back("scene: target " + std::to_string(t.id) +
                          " is not in front of the array");
        if (!(t.rcs > 0.0))
            bad.push_back("scene: target " + std::to_string(t.id) + " has non-positive rcs");
    }
    for (const PropagationPath& p : cfg.scene.paths)
    {
        if (!(p.fwd_dist > 0.0) || !(p.bwd_dist > 0.0))
            bad.push_back("scene: path legs must be positive");
        if (!(p.rcs > 0.0))
            bad.push_back("scene: path rcs must be positive");
        if (p.depart.zenith < 0.0 || p.depart.zenith > kPi || p.arrive.zenith < 0.0 ||
            p.arrive.zenith > kPi)
            bad.push_back("scene: path zenith outside [0, 180] degrees");
    }

    if (cfg.proc.upscale_w < 0 || cfg.proc.upscale_h < 0 ||
        (cfg.proc.upscale_w == 0) != (cfg.proc.upscale_h == 0))
        bad.push_back("processing: upscale needs both width and height (or neither)");
    if (cfg.proc.upscale_w > 0 && cfg.grid.oversampling >= 1 && cfg.ris.n_h >= 1 &&
        cfg.ris.n_v >= 1)
    {
        if (cfg.proc.upscale_w < cfg.grid.oversampling * cfg.ris.n_h ||
            cfg.proc.upscale_h < cfg.grid.oversampling * cfg.ris.n_v)
            bad.push_back("processing: upscale target is smaller than the sensing grid");
    }
    if (cfg.proc.background_depth_m < 0.0)
        bad.push_back("processing: background depth must be >= 0 (0 = max range)");

    if (cfg.workers < 0)
        bad.push_back("workers must be >= 0");

    return bad;
}

} // namespace rissense
