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

#include "rissense/range_processing.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "rissense/parallel.hpp"

namespace rissense {

// FFTW planning is not thread safe (execution is); serialize plan lifetime.
static std::mutex g_fftw_mutex;

RangeProfile range_profile(const SensingMatrix& sm, Window window, int workers)
{
    std::size_t n = sm.z.rows;
    if (n == 0 || sm.z.cols == 0)
        throw DimensionMismatch("empty receive matrix");

    RangeProfile rp;
    rp.bins = CMat(n, sm.z.cols);

    std::vector<double> win;
    if (window == Window::Hann)
    {
        win.resize(n);
        for (std::size_t s = 0; s < n; s++)
            win[s] = (n == 1) ? 1.0
                              : 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(s) /
                                                     static_cast<double>(n - 1));
    }

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        std::vector<cplx> scratch(n);
        plan = fftw_plan_dft_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(scratch.data()),
                                reinterpret_cast<fftw_complex*>(scratch.data()), FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    if (!plan)
        throw Error("FFT planning failed");

    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    parallel_for(sm.z.cols, workers, [&](std::size_t m) {
        const cplx* src = sm.z.col(m);
        cplx* dst = rp.bins.col(m);
        if (win.empty())
            std::copy(src, src + n, dst);
        else
            for (std::size_t s = 0; s < n; s++)
                dst[s] = src[s] * win[s];
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(dst),
                         reinterpret_cast<fftw_complex*>(dst));
        for (std::size_t s = 0; s < n; s++)
            dst[s] *= scale;
    });

    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_destroy_plan(plan);
    }
    return rp;
}

std::vector<double> scene_range(const RangeProfile& rp, double range_res)
{
    if (!(range_res > 0.0))
        throw ValidationError("range resolution must be positive");
    if (rp.bins.rows == 0 || rp.bins.cols == 0)
        throw DimensionMismatch("empty range profile");

    std::vector<double> ranges(rp.bins.cols);
    for (std::size_t m = 0; m < rp.bins.cols; m++)
    {
        const cplx* col = rp.bins.col(m);
        std::size_t best = 0;
        double best_mag = std::norm(col[0]);
        for (std::size_t s = 1; s < rp.bins.rows; s++)
        {
            double mag = std::norm(col[s]);
            if (mag > best_mag) // strict: ties keep the smaller bin
            {
                best_mag = mag;
                best = s;
            }
        }
        ranges[m] = static_cast<double>(best) * range_res;
    }
    return ranges;
}

RealMat range_map(std::span<const double> ranges, int nbar_h, int nbar_v)
{
    if (nbar_h < 1 || nbar_v < 1 ||
        ranges.size() != static_cast<std::size_t>(nbar_h) * static_cast<std::size_t>(nbar_v))
        throw DimensionMismatch("beam count does not match the grid");

    RealMat out(nbar_v, nbar_h);
    for (int v = 0; v < nbar_v; v++)
        for (int h = 0; h < nbar_h; h++)
            out.at(v, h) = ranges[static_cast<std::size_t>(v) * nbar_h + h];
    return out;
}

DepthMap range_to_depth(const RealMat& ranges, const SceneGrid& grid, double delta1)
{
    if (ranges.rows != grid.nbar_v || ranges.cols != grid.nbar_h)
        throw DimensionMismatch("range map does not match the grid");
    if (!(delta1 > 0.0))
        throw ZeroDistance("reference feed distance must be positive");

    DepthMap map;
    map.grid = grid;
    map.values = RealMat(grid.nbar_v, grid.nbar_h);
    for (int v = 0; v < grid.nbar_v; v++)
    {
        for (int h = 0; h < grid.nbar_h; h++)
        {
            const Direction& d = grid.at(v, h);
            double uy = std::sin(d.azimuth) * std::sin(d.zenith);
            double dist = std::max(ranges.at(v, h) - delta1, 0.0);
            map.at(v, h) = dist * uy;
        }
    }
    return map;
}

} // namespace rissense
