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

#include "rissense/scene.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace rissense {

static const char* kPathsHeader =
    "target_id,path_id,depart_az_deg,depart_ze_deg,arrive_az_deg,arrive_ze_deg,"
    "fwd_dist_m,bwd_dist_m,fwd_loss_db,bwd_loss_db,rcs_m2";

static void validate_targets(const Scene& scene)
{
    std::unordered_set<int> ids;
    for (const Target& t : scene.targets)
    {
        if (!ids.insert(t.id).second)
            throw ValidationError("duplicate target id " + std::to_string(t.id));
        if (!(t.position.y > 0.0))
            throw ValidationError("target " + std::to_string(t.id) + " is not in front of the array");
        if (!(t.rcs > 0.0))
            throw ValidationError("target " + std::to_string(t.id) + " has non-positive rcs");
    }
}

std::vector<PropagationPath> synthesize_paths(const Scene& scene)
{
    if (scene.empty())
        throw EmptyScene("scene has neither targets nor injected paths");
    validate_targets(scene);

    std::vector<PropagationPath> paths;
    paths.reserve(scene.targets.size() + scene.extra_paths.size());

    for (const Target& t : scene.targets)
    {
        PropagationPath p;
        p.target_id = t.id;
        p.path_id = 0;
        p.depart = p.arrive = direction_to_angles(t.position.normalized());
        p.fwd_dist = p.bwd_dist = t.position.norm();
        p.fwd_loss = p.bwd_loss = 1.0;
        p.rcs = t.rcs;
        paths.push_back(p);
    }
    paths.insert(paths.end(), scene.extra_paths.begin(), scene.extra_paths.end());
    return paths;
}

static double parse_double(const std::string& s, std::size_t row, const char* col)
{
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw ParseError(row, std::string("bad value for ") + col + ": '" + s + "'");
    return v;
}

static int parse_int(const std::string& s, std::size_t row, const char* col)
{
    const char* begin = s.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw ParseError(row, std::string("bad value for ") + col + ": '" + s + "'");
    return static_cast<int>(v);
}

static std::vector<std::string> split_csv_line(std::string line)
{
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

std::vector<PropagationPath> load_paths(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("missing header row");
    auto header = split_csv_line(line);
    auto expect = split_csv_line(kPathsHeader);
    if (header != expect)
        throw ParseError("unexpected header row");

    std::vector<PropagationPath> paths;
    std::size_t row = 0;
    while (std::getline(in, line))
    {
        if (line.empty() || line == "\r")
            continue;
        row++;
        auto f = split_csv_line(line);
        if (f.size() != 11)
            throw ParseError(row, "expected 11 fields, got " + std::to_string(f.size()));

        PropagationPath p;
        p.target_id = parse_int(f[0], row, "target_id");
        p.path_id = parse_int(f[1], row, "path_id");
        double dep_az = parse_double(f[2], row, "depart_az_deg");
        double dep_ze = parse_double(f[3], row, "depart_ze_deg");
        double arr_az = parse_double(f[4], row, "arrive_az_deg");
        double arr_ze = parse_double(f[5], row, "arrive_ze_deg");
        p.fwd_dist = parse_double(f[6], row, "fwd_dist_m");
        p.bwd_dist = parse_double(f[7], row, "bwd_dist_m");
        double fwd_db = parse_double(f[8], row, "fwd_loss_db");
        double bwd_db = parse_double(f[9], row, "bwd_loss_db");
        p.rcs = parse_double(f[10], row, "rcs_m2");

        if (dep_ze < 0.0 || dep_ze > 180.0 || arr_ze < 0.0 || arr_ze > 180.0)
            throw ValidationError(row, "zenith outside [0, 180] degrees");
        if (!(p.fwd_dist > 0.0) || !(p.bwd_dist > 0.0))
            throw ValidationError(row, "path legs must be positive");
        if (fwd_db < 0.0 || bwd_db < 0.0)
            throw ValidationError(row, "losses must be >= 0 dB");
        if (!(p.rcs > 0.0))
            throw ValidationError(row, "rcs must be positive");

        p.depart = {wrap_phase(deg2rad(dep_az)), deg2rad(dep_ze)};
        p.arrive = {wrap_phase(deg2rad(arr_az)), deg2rad(arr_ze)};
        p.fwd_loss = db2lin(fwd_db);
        p.bwd_loss = db2lin(bwd_db);
        paths.push_back(p);
    }
    return paths;
}

std::vector<PropagationPath> load_paths(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open " + path);
    return load_paths(f);
}

void save_paths(std::span<const PropagationPath> paths, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    f << kPathsHeader << '\n';
    char buf[360];
    for (const PropagationPath& p : paths)
    {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      p.target_id, p.path_id, rad2deg(p.depart.azimuth), rad2deg(p.depart.zenith),
                      rad2deg(p.arrive.azimuth), rad2deg(p.arrive.zenith), p.fwd_dist, p.bwd_dist,
                      lin2db(p.fwd_loss), lin2db(p.bwd_loss), p.rcs);
        f << buf;
    }
    if (!f)
        throw IoError("write to " + path + " failed");
}

DepthMap ground_truth_depth(const Scene& scene, const SceneGrid& grid, double background_depth)
{
    if (grid.point_count() < 1)
        throw DegenerateGrid("empty grid");
    if (!(background_depth > 0.0))
        throw ValidationError("background depth must be positive");
    validate_targets(scene);

    DepthMap map;
    map.grid = grid;
    map.values = RealMat(grid.nbar_v, grid.nbar_h, background_depth);

    for (const Target& t : scene.targets)
    {
        auto px = owning_pixel(grid, t.position.normalized());
        if (!px)
            continue;
        double& cell = map.at(px->first, px->second);
        // Nearest target wins; a target deeper than the background never
        // raises the pixel.
        cell = std::min(cell, t.position.y);
    }
    return map;
}

} // namespace rissense
