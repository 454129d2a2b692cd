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

#include "rissense/codebook.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace rissense {

std::vector<cplx> design_vector(const RisGeometry& geom, const FeedChannel& fc,
                                const Direction& dir)
{
    if (static_cast<int>(fc.g.size()) != geom.size())
        throw DimensionMismatch("feed channel does not match the array size");

    auto v = steering_vector(geom, dir);
    std::vector<cplx> psi(v.size());
    for (std::size_t n = 0; n < v.size(); n++)
    {
        // Cancel both the steering phase and the feed propagation phase.
        double cycles = (fc.delta[n] - fc.delta1) / geom.wavelength;
        psi[n] = std::conj(v[n] * unit_phasor(-cycles));
    }
    return psi;
}

Codebook build_codebook(const RisGeometry& geom, const FeedChannel& fc, const SceneGrid& grid)
{
    Codebook cb;
    cb.grid = grid;
    cb.psi.reserve(grid.directions.size());
    for (const Direction& dir : grid.directions)
        cb.psi.push_back(design_vector(geom, fc, dir));
    return cb;
}

std::string Codebook::id() const
{
    char buf[96];
    std::snprintf(buf, sizeof(buf), "grid%dx%d_fov%.6g_ar%.6g", grid.nbar_h, grid.nbar_v,
                  rad2deg(grid.fov), grid.aspect);
    return buf;
}

void write_codebook_csv(const Codebook& cb, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    f << "m,az_deg,ze_deg\n";
    char buf[96];
    for (std::size_t m = 0; m < cb.grid.directions.size(); m++)
    {
        const Direction& d = cb.grid.directions[m];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", m, rad2deg(d.azimuth),
                      rad2deg(d.zenith));
        f << buf;
    }
    if (!f)
        throw IoError("write to " + path + " failed");
}

void write_codebook_phases(const Codebook& cb, const std::string& path)
{
    static_assert(std::endian::native == std::endian::little, "little-endian hosts only");

    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    for (const auto& psi : cb.psi)
        for (const cplx& p : psi)
        {
            double phase = std::arg(p);
            f.write(reinterpret_cast<const char*>(&phase), sizeof(phase));
        }
    if (!f)
        throw IoError("write to " + path + " failed");
}

} // namespace rissense
