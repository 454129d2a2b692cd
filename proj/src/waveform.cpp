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

#include "rissense/waveform.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "rissense/parallel.hpp"

namespace rissense {

void RadarConfig::validate() const
{
    if (!(f0 > 0.0))
        throw ConfigError("start frequency must be positive");
    if (!(slope > 0.0))
        throw ConfigError("chirp slope must be positive");
    if (!(fs > 0.0))
        throw ConfigError("sampling rate must be positive");
    if (m_sample < 1)
        throw ConfigError("need at least one sample per chirp");
    if (!(t_active > 0.0))
        throw ConfigError("active chirp duration must be positive");
    if (t_active > t_pri)
        throw ConfigError("active chirp exceeds the repetition interval");
    if (m_sample / fs > t_active)
        throw ConfigError("ADC window exceeds the active chirp");
    if (!(tx_power_mw > 0.0))
        throw ConfigError("transmit power must be positive");
}

DerivedParams derived_params(const RadarConfig& cfg)
{
    cfg.validate();
    DerivedParams d;
    d.bandwidth = cfg.slope * cfg.t_active;
    d.range_res = kSpeedOfLight / (2.0 * d.bandwidth);
    d.max_range = cfg.fs * kSpeedOfLight / (2.0 * cfg.slope);
    d.chirp_rate = 1.0 / cfg.t_pri;
    return d;
}

double noise_variance_mw(const RadarConfig& cfg)
{
    if (!cfg.noise_enabled)
        return 0.0;
    double kt_mw_per_hz = std::pow(10.0, -174.0 / 10.0);
    return kt_mw_per_hz * (cfg.slope * cfg.t_active) * db2lin(cfg.noise_figure_db);
}

static std::uint64_t splitmix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform draw in (0, 1], safe as a log argument.
static double to_unit(std::uint64_t u)
{
    return static_cast<double>((u >> 11) + 1) * 0x1.0p-53;
}

cplx noise_sample(std::uint64_t seed, std::uint32_t beam, std::uint32_t sample)
{
    constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    std::uint64_t counter = (static_cast<std::uint64_t>(beam) << 32) | sample;
    std::uint64_t base = seed + 2 * counter * kGolden;
    double u1 = to_unit(splitmix64(base));
    double u2 = to_unit(splitmix64(base + kGolden));

    // Box-Muller; the pair has unit variance per real component.
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

std::vector<cplx> if_signal(std::span<const PathEcho> echoes, const RadarConfig& cfg,
                            std::uint32_t beam_index)
{
    cfg.validate();
    for (const PathEcho& e : echoes)
        if (!(e.delay_s >= 0.0) || e.delay_s >= cfg.t_active)
            throw RangeOverflow("echo delay outside the active chirp");

    std::vector<cplx> z(static_cast<std::size_t>(cfg.m_sample), cplx{0.0, 0.0});
    double ts = 1.0 / cfg.fs;
    double amp = std::sqrt(cfg.tx_power_mw);

    for (const PathEcho& e : echoes)
    {
        cplx c = amp * std::conj(e.gain);
        double tau = e.delay_s;
        // Dechirped phase in cycles: f0*tau - slope*tau^2/2 + slope*ts*tau*s.
        double c0 = cfg.f0 * tau - 0.5 * cfg.slope * tau * tau;
        double c1 = cfg.slope * ts * tau;
        for (int s = 0; s < cfg.m_sample; s++)
            z[static_cast<std::size_t>(s)] += c * unit_phasor(c0 + c1 * s);
    }

    double var = noise_variance_mw(cfg);
    if (var > 0.0)
    {
        double sigma = std::sqrt(var / 2.0);
        for (int s = 0; s < cfg.m_sample; s++)
        {
            double t = ts * s;
            // Noise enters before dechirping and is rotated by the chirp
            // reference phase.
            double ref_cycles = cfg.f0 * t + 0.5 * cfg.slope * t * t;
            cplx n = noise_sample(cfg.rng_seed, beam_index, static_cast<std::uint32_t>(s));
            z[static_cast<std::size_t>(s)] += sigma * n * unit_phasor(ref_cycles);
        }
    }
    return z;
}

SensingMatrix sweep(std::span<const PropagationPath> paths, const Codebook& cb,
                    const FeedChannel& fc, const RisGeometry& geom, const Patterns& patterns,
                    const RadarConfig& cfg, int workers)
{
    cfg.validate();
    if (cb.size() == 0)
        throw DimensionMismatch("codebook is empty");
    if (static_cast<int>(fc.g.size()) != geom.size())
        throw DimensionMismatch("feed channel does not match the array size");

    // Steering vectors depend on the path only; hoist them out of the beam loop.
    std::vector<std::vector<cplx>> v_dep(paths.size()), v_arr(paths.size());
    std::vector<double> delay(paths.size());
    for (std::size_t p = 0; p < paths.size(); p++)
    {
        v_dep[p] = steering_vector(geom, paths[p].depart);
        v_arr[p] = steering_vector(geom, paths[p].arrive);
        double range = 2.0 * fc.delta1 + paths[p].fwd_dist + paths[p].bwd_dist;
        delay[p] = range / kSpeedOfLight;
    }

    SensingMatrix sm;
    sm.z = CMat(static_cast<std::size_t>(cfg.m_sample), cb.size());
    sm.config = cfg;
    sm.codebook_id = cb.id();

    parallel_for(cb.size(), workers, [&](std::size_t m) {
        std::vector<PathEcho> echoes(paths.size());
        for (std::size_t p = 0; p < paths.size(); p++)
        {
            echoes[p].gain = path_gain_cached(paths[p], cb.psi[m], fc, geom.wavelength, patterns,
                                              v_dep[p], v_arr[p]);
            echoes[p].delay_s = delay[p];
        }
        auto col = if_signal(echoes, cfg, static_cast<std::uint32_t>(m));
        std::memcpy(sm.z.col(m), col.data(), col.size() * sizeof(cplx));
    });
    return sm;
}

namespace {

constexpr char kZMagic[4] = {'R', 'I', 'S', 'Z'};
constexpr std::size_t kZHeaderSize = 32;

} // namespace

void write_z_dump(const SensingMatrix& sm, const std::string& path)
{
    static_assert(std::endian::native == std::endian::little, "little-endian hosts only");
    static_assert(sizeof(cplx) == 16, "expected packed re/im doubles");

    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");

    unsigned char head[kZHeaderSize] = {};
    std::memcpy(head, kZMagic, 4);
    std::uint32_t rows = static_cast<std::uint32_t>(sm.z.rows);
    std::uint32_t cols = static_cast<std::uint32_t>(sm.z.cols);
    std::memcpy(head + 4, &rows, 4);
    std::memcpy(head + 8, &cols, 4);
    std::memcpy(head + 12, &sm.config.rng_seed, 8);
    f.write(reinterpret_cast<const char*>(head), kZHeaderSize);
    f.write(reinterpret_cast<const char*>(sm.z.data.data()),
            static_cast<std::streamsize>(sm.z.data.size() * sizeof(cplx)));
    if (!f)
        throw IoError("write to " + path + " failed");
}

ZDump read_z_dump(const std::string& path)
{
    static_assert(std::endian::native == std::endian::little, "little-endian hosts only");

    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);

    unsigned char head[kZHeaderSize];
    f.read(reinterpret_cast<char*>(head), kZHeaderSize);
    if (!f || std::memcmp(head, kZMagic, 4) != 0)
        throw ParseError("not a receive matrix dump: " + path);

    std::uint32_t rows, cols;
    ZDump dump;
    std::memcpy(&rows, head + 4, 4);
    std::memcpy(&cols, head + 8, 4);
    std::memcpy(&dump.seed, head + 12, 8);

    dump.z = CMat(rows, cols);
    f.read(reinterpret_cast<char*>(dump.z.data.data()),
           static_cast<std::streamsize>(dump.z.data.size() * sizeof(cplx)));
    if (!f || f.gcount() != static_cast<std::streamsize>(dump.z.data.size() * sizeof(cplx)))
        throw ParseError("truncated receive matrix dump: " + path);
    return dump;
}

} // namespace rissense
