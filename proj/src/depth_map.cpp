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

#include "rissense/depth_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

namespace rissense {

DepthMap upscale(const DepthMap& map, int out_w, int out_h, Interp interp)
{
    int in_w = map.cols(), in_h = map.rows();
    if (in_w < 1 || in_h < 1)
        throw DimensionMismatch("cannot upscale an empty map");
    if (out_w < in_w || out_h < in_h)
        throw DimensionMismatch("output must be at least as large as the input");

    DepthMap out;
    out.grid = map.grid;
    out.values = RealMat(out_h, out_w);

    for (int r = 0; r < out_h; r++)
    {
        for (int c = 0; c < out_w; c++)
        {
            // Source coordinates of this output pixel center.
            double sr = (r + 0.5) * in_h / out_h - 0.5;
            double sc = (c + 0.5) * in_w / out_w - 0.5;

            if (interp == Interp::Nearest)
            {
                int ir = std::clamp(static_cast<int>(std::lround(sr)), 0, in_h - 1);
                int ic = std::clamp(static_cast<int>(std::lround(sc)), 0, in_w - 1);
                out.at(r, c) = map.at(ir, ic);
            }
            else
            {
                sr = std::clamp(sr, 0.0, static_cast<double>(in_h - 1));
                sc = std::clamp(sc, 0.0, static_cast<double>(in_w - 1));
                int r0 = std::min(static_cast<int>(sr), in_h - 2 >= 0 ? in_h - 2 : 0);
                int c0 = std::min(static_cast<int>(sc), in_w - 2 >= 0 ? in_w - 2 : 0);
                int r1 = std::min(r0 + 1, in_h - 1);
                int c1 = std::min(c0 + 1, in_w - 1);
                double fr = sr - r0, fc = sc - c0;
                out.at(r, c) = (1.0 - fr) * ((1.0 - fc) * map.at(r0, c0) + fc * map.at(r0, c1)) +
                               fr * ((1.0 - fc) * map.at(r1, c0) + fc * map.at(r1, c1));
            }
        }
    }
    return out;
}

ErrorMetrics depth_error(const DepthMap& estimate, const DepthMap& truth)
{
    if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
        throw DimensionMismatch("depth maps differ in shape");
    std::size_t n = estimate.values.values.size();
    if (n == 0)
        throw DimensionMismatch("depth maps are empty");

    double sq = 0.0, ab = 0.0;
    for (std::size_t i = 0; i < n; i++)
    {
        double d = estimate.values.values[i] - truth.values.values[i];
        sq += d * d;
        ab += std::abs(d);
    }
    return {std::sqrt(sq / n), ab / n};
}

void write_pgm16(const DepthMap& map, const std::string& path, double meters_per_level)
{
    if (!(meters_per_level > 0.0))
        throw ValidationError("meters_per_level must be positive");

    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    char head[128];
    std::snprintf(head, sizeof(head), "P5\n# meters_per_level %.17g\n%d %d\n65535\n",
                  meters_per_level, map.cols(), map.rows());
    f << head;

    for (int r = 0; r < map.rows(); r++)
    {
        for (int c = 0; c < map.cols(); c++)
        {
            double q = std::nearbyint(map.at(r, c) / meters_per_level);
            std::uint16_t level =
                static_cast<std::uint16_t>(std::clamp(q, 0.0, 65535.0));
            unsigned char be[2] = {static_cast<unsigned char>(level >> 8),
                                   static_cast<unsigned char>(level & 0xff)};
            f.write(reinterpret_cast<const char*>(be), 2);
        }
    }
    if (!f)
        throw IoError("write to " + path + " failed");
}

void write_depth_csv(const DepthMap& map, const std::string& path)
{
    std::ofstream f(path, std::ios::binary); // binary: identical bytes on every platform
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    char buf[40];
    for (int r = 0; r < map.rows(); r++)
    {
        for (int c = 0; c < map.cols(); c++)
        {
            std::snprintf(buf, sizeof(buf), "%.17g", map.at(r, c));
            if (c)
                f << ',';
            f << buf;
        }
        f << '\n';
    }
    if (!f)
        throw IoError("write to " + path + " failed");
}

} // namespace rissense
