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
#include <span>
#include <string>
#include <vector>

#include "rissense/codebook.hpp"
#include "rissense/complex_mat.hpp"
#include "rissense/geometry.hpp"

namespace rissense {

// Chirp and receiver parameters of the FMCW front end.
struct RadarConfig {
    double f0 = 0.0;              // chirp start frequency [Hz]
    double slope = 0.0;           // chirp slope [Hz/s]
    double t_active = 0.0;        // active chirp duration [s]
    double t_pri = 0.0;           // chirp repetition interval [s]
    double fs = 0.0;              // ADC rate [samples/s]
    int m_sample = 0;             // ADC samples per chirp
    double tx_power_mw = 1.0;     // transmit power, linear [mW]
    double noise_figure_db = 10.0;
    bool noise_enabled = true;
    std::uint64_t rng_seed = 0;

    double wavelength() const { return kSpeedOfLight / f0; }

    // Throws ConfigError when the chirp timing is inconsistent.
    void validate() const;
};

// Quantities fixed by the chirp parameters.
struct DerivedParams {
    double bandwidth = 0.0;   // slope * t_active [Hz]
    double range_res = 0.0;   // c / (2 * bandwidth) [m]
    double max_range = 0.0;   // fs * c / (2 * slope) [m]
    double chirp_rate = 0.0;  // 1 / t_pri [chirps/s]

    // Depth maps per second when sweeping `beams` phase profiles.
    double map_rate(std::size_t beams) const
    {
        return beams ? chirp_rate / static_cast<double>(beams) : 0.0;
    }
};

DerivedParams derived_params(const RadarConfig& cfg);

// Thermal noise power kT*BW*NF at the receiver in linear mW (kT taken at
// -174 dBm/Hz); zero when the config disables noise.
double noise_variance_mw(const RadarConfig& cfg);

// Unit-variance circular complex Gaussian draw addressed by (seed, beam,
// sample). Counter-based, so any cell can be generated independently of
// evaluation order.
cplx noise_sample(std::uint64_t seed, std::uint32_t beam, std::uint32_t sample);

// One scatterer echo as seen by the receive mixer.
struct PathEcho {
    cplx gain = 0.0;     // end-to-end complex path amplitude
    double delay_s = 0.0; // round-trip propagation delay
};

// Dechirped receive samples of one chirp. Each echo contributes
// sqrt(tx_power)*conj(gain)*exp(j*2*pi*(f0*tau + slope*t*tau - slope*tau^2/2))
// at fast time t = s/fs; noise is drawn per (seed, beam_index, s) and carries
// the dechirp reference phase. Throws RangeOverflow when an echo's delay
// reaches the active chirp duration.
std::vector<cplx> if_signal(std::span<const PathEcho> echoes, const RadarConfig& cfg,
                            std::uint32_t beam_index);

// Receive matrix of a full codebook sweep: column m holds the chirp received
// under phase profile m.
struct SensingMatrix {
    CMat z;                  // m_sample x M
    RadarConfig config;
    std::string codebook_id;
};

SensingMatrix sweep(std::span<const PropagationPath> paths, const Codebook& cb,
                    const FeedChannel& fc, const RisGeometry& geom, const Patterns& patterns,
                    const RadarConfig& cfg, int workers = 0);

// Raw receive matrix dump: 32-byte header ("RISZ", u32 m_sample, u32 beams,
// u64 seed, 12 bytes reserved) followed by column-major re/im interleaved
// little-endian float64.
void write_z_dump(const SensingMatrix& sm, const std::string& path);

struct ZDump {
    CMat z;
    std::uint64_t seed = 0;
};

ZDump read_z_dump(const std::string& path);

} // namespace rissense
