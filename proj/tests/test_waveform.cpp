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

#include <cstring>
#include <random>

#include "rissense/waveform.hpp"
#include "test_support.hpp"

using namespace rissense;

TEST_CASE("derived parameters of the reference chirp")
{
    RadarConfig cfg = testsup::reference_radar();
    DerivedParams d = derived_params(cfg);

    // Exact identities.
    CHECK(d.bandwidth == cfg.slope * cfg.t_active);
    CHECK(d.range_res == kSpeedOfLight / (2.0 * d.bandwidth));
    CHECK(d.max_range == cfg.fs * kSpeedOfLight / (2.0 * cfg.slope));
    CHECK(d.chirp_rate == 1.0 / cfg.t_pri);

    // Published figures for this setup, all within 0.5%.
    CHECK(d.bandwidth == doctest::Approx(4.04e9).epsilon(5e-3));
    CHECK(d.range_res == doctest::Approx(0.0371).epsilon(5e-3));
    CHECK(d.max_range == doctest::Approx(18.95).epsilon(5e-3));
    CHECK(d.chirp_rate == doctest::Approx(74.2e3).epsilon(5e-3));
    CHECK(d.map_rate(14400) == doctest::Approx(5.15).epsilon(5e-3));
    CHECK(d.map_rate(25600) == doctest::Approx(2.90).epsilon(5e-3));
    CHECK(d.map_rate(0) == 0.0);
}

TEST_CASE("radar config validation")
{
    RadarConfig cfg = testsup::reference_radar();
    CHECK_NOTHROW(cfg.validate());

    RadarConfig bad = cfg;
    bad.t_pri = bad.t_active / 2.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError); // chirp exceeds the PRI

    bad = cfg;
    bad.t_active = 13.47e-6; // shorter than the 512-sample ADC window
    bad.t_pri = bad.t_active;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = cfg;
    bad.slope = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.m_sample = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.tx_power_mw = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("noise floor matches kT * BW * NF")
{
    RadarConfig cfg = testsup::reference_radar(true);
    double var = noise_variance_mw(cfg);
    // -174 dBm/Hz + 10*log10(4.042 GHz) + 10 dB = -67.93 dBm.
    CHECK(lin2db(var) == doctest::Approx(-67.93).epsilon(1e-4));

    cfg.noise_enabled = false;
    CHECK(noise_variance_mw(cfg) == 0.0);
}

TEST_CASE("counter-based noise is reproducible and well distributed")
{
    CHECK(noise_sample(1, 2, 3) == noise_sample(1, 2, 3));
    CHECK(noise_sample(1, 2, 3) != noise_sample(2, 2, 3));
    CHECK(noise_sample(1, 2, 3) != noise_sample(1, 3, 3));
    CHECK(noise_sample(1, 2, 3) != noise_sample(1, 2, 4));

    double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0, cross = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; i++)
    {
        cplx w = noise_sample(42, static_cast<std::uint32_t>(i / 512),
                              static_cast<std::uint32_t>(i % 512));
        sum_re += w.real();
        sum_im += w.imag();
        sum_re2 += w.real() * w.real();
        sum_im2 += w.imag() * w.imag();
        cross += w.real() * w.imag();
    }
    CHECK(std::abs(sum_re / n) < 0.01);
    CHECK(std::abs(sum_im / n) < 0.01);
    CHECK(sum_re2 / n == doctest::Approx(1.0).epsilon(0.02)); // unit variance per component
    CHECK(sum_im2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(cross / n) < 0.01);
}

TEST_CASE("single echo produces a constant-modulus beat tone")
{
    RadarConfig cfg = testsup::reference_radar();
    cfg.tx_power_mw = 1.0;

    // One-way 5 m: 1 m feed leg plus 4 m each way.
    double range = 2.0 * 1.0 + 4.0 + 4.0;
    PathEcho echo{cplx{1.0, 0.0}, range / kSpeedOfLight};
    auto z = if_signal({&echo, 1}, cfg, 0);
    REQUIRE(z.size() == 512);

    // First sample carries only the delay-dependent phase offset.
    double tau = echo.delay_s;
    cplx want0 = unit_phasor(cfg.f0 * tau - 0.5 * cfg.slope * tau * tau);
    CHECK(std::abs(z[0] - want0) < 1e-12);

    // Constant modulus sqrt(tx)*|h| and uniform phase steps of slope*tau/fs.
    double step = kTwoPi * std::remainder(cfg.slope * tau / cfg.fs, 1.0);
    for (std::size_t s = 0; s < z.size(); s++)
    {
        CHECK(std::abs(z[s]) == doctest::Approx(1.0).epsilon(1e-12));
        if (s > 0)
            CHECK(std::arg(z[s] * std::conj(z[s - 1])) == doctest::Approx(step).epsilon(1e-9));
    }

    // The echo's complex gain enters conjugated.
    PathEcho rotated{std::polar(0.5, 0.7), echo.delay_s};
    auto z2 = if_signal({&rotated, 1}, cfg, 0);
    CHECK(std::abs(z2[0] - 0.5 * std::polar(1.0, -0.7) * want0) < 1e-12);
}

TEST_CASE("noiseless energy equals samples times per-path power")
{
    RadarConfig cfg = testsup::reference_radar();
    cfg.tx_power_mw = 100.0;

    PathEcho echo{std::polar(3.2e-4, 1.1), 20.0 / kSpeedOfLight};
    auto z = if_signal({&echo, 1}, cfg, 0);
    double energy = 0.0;
    for (const cplx& v : z)
        energy += std::norm(v);
    double rho = cfg.tx_power_mw * std::norm(echo.gain);
    CHECK(energy == doctest::Approx(512.0 * rho).epsilon(1e-9));
}

TEST_CASE("echoes superpose exactly")
{
    RadarConfig cfg = testsup::reference_radar();
    PathEcho a{std::polar(1.0e-3, 0.3), 12.0 / kSpeedOfLight};
    PathEcho b{std::polar(5.0e-4, -1.2), 31.0 / kSpeedOfLight};

    auto za = if_signal({&a, 1}, cfg, 0);
    auto zb = if_signal({&b, 1}, cfg, 0);
    PathEcho both[2] = {a, b};
    auto zab = if_signal({both, 2}, cfg, 0);
    for (std::size_t s = 0; s < za.size(); s++)
        CHECK(zab[s] == za[s] + zb[s]);
}

TEST_CASE("echo delays past the active chirp overflow")
{
    RadarConfig cfg = testsup::reference_radar();
    PathEcho echo{cplx{1.0, 0.0}, cfg.t_active};
    CHECK_THROWS_AS(if_signal({&echo, 1}, cfg, 0), RangeOverflow);
    echo.delay_s = -1.0e-9;
    CHECK_THROWS_AS(if_signal({&echo, 1}, cfg, 0), RangeOverflow);
    echo.delay_s = cfg.t_active * 0.99;
    CHECK_NOTHROW(if_signal({&echo, 1}, cfg, 0));
}

TEST_CASE("noise injection is seeded and beam indexed")
{
    RadarConfig cfg = testsup::reference_radar(true);
    auto z1 = if_signal({}, cfg, 0);
    auto z2 = if_signal({}, cfg, 0);
    CHECK(z1 == z2); // same seed, same beam

    auto z3 = if_signal({}, cfg, 1);
    CHECK(z1 != z3); // beam index feeds the counter

    cfg.rng_seed = 2;
    auto z4 = if_signal({}, cfg, 0);
    CHECK(z1 != z4);

    // Empirical power tracks the configured variance.
    double var = noise_variance_mw(cfg);
    double p = 0.0;
    int cols = 64;
    for (int m = 0; m < cols; m++)
    {
        auto z = if_signal({}, cfg, static_cast<std::uint32_t>(m));
        for (const cplx& v : z)
            p += std::norm(v);
    }
    p /= 512.0 * cols;
    CHECK(p == doctest::Approx(var).epsilon(0.03));
}

namespace {

struct SweepSetup {
    RisGeometry geom;
    Patterns patterns{AntennaPattern::from_dbi(25.0), {1.0}};
    FeedChannel fc;
    SceneGrid grid;
    Codebook cb;
    std::vector<PropagationPath> paths;

    SweepSetup()
    {
        geom.n_h = 4;
        geom.n_v = 4;
        geom.wavelength = kSpeedOfLight / 60.0e9;
        geom.spacing = geom.wavelength / 2.0;
        geom.feed_position = {0.0, -0.3, 0.0};
        fc = feed_channel(geom, patterns);
        grid = build_grid(deg2rad(60.0), 1.0, 4, 4);
        cb = build_codebook(geom, fc, grid);

        Scene scene;
        scene.targets.push_back({angles_to_direction(grid.at(1, 2)) * 3.0, 1.0, 1});
        scene.targets.push_back({angles_to_direction(grid.at(3, 0)) * 5.0, 0.5, 2});
        paths = synthesize_paths(scene);
    }
};

} // namespace

TEST_CASE("sweep matches per-beam synthesis")
{
    SweepSetup s;
    RadarConfig cfg = testsup::reference_radar(true);

    SensingMatrix sm = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 1);
    REQUIRE(sm.z.rows == 512);
    REQUIRE(sm.z.cols == 16);
    CHECK(sm.codebook_id == s.cb.id());

    // Column m must equal if_signal under profile m, echo gains included.
    for (std::size_t m = 0; m < s.cb.size(); m++)
    {
        std::vector<PathEcho> echoes;
        for (const PropagationPath& p : s.paths)
        {
            PathEcho e;
            e.gain = path_gain(p, s.cb.psi[m], s.fc, s.geom, s.patterns);
            e.delay_s = (2.0 * s.fc.delta1 + p.fwd_dist + p.bwd_dist) / kSpeedOfLight;
            echoes.push_back(e);
        }
        auto col = if_signal(echoes, cfg, static_cast<std::uint32_t>(m));
        CHECK(std::memcmp(sm.z.col(m), col.data(), col.size() * sizeof(cplx)) == 0);
    }
}

TEST_CASE("sweep is deterministic and schedule independent")
{
    SweepSetup s;
    RadarConfig cfg = testsup::reference_radar(true);

    SensingMatrix a = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 1);
    SensingMatrix b = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 4);
    CHECK(a.z.data == b.z.data); // worker count must not matter

    cfg.rng_seed = 99;
    SensingMatrix c = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 2);
    CHECK(a.z.data != c.z.data);
}

TEST_CASE("identical profiles give identical noiseless columns")
{
    SweepSetup s;
    RadarConfig cfg = testsup::reference_radar(false);

    Codebook twin;
    twin.grid = s.grid;
    twin.psi = {s.cb.psi[5], s.cb.psi[5]};
    SensingMatrix sm = sweep(s.paths, twin, s.fc, s.geom, s.patterns, cfg, 1);
    CHECK(std::memcmp(sm.z.col(0), sm.z.col(1), sm.z.rows * sizeof(cplx)) == 0);

    // With noise on, the beam counter separates them.
    cfg.noise_enabled = true;
    SensingMatrix sn = sweep(s.paths, twin, s.fc, s.geom, s.patterns, cfg, 1);
    CHECK(std::memcmp(sn.z.col(0), sn.z.col(1), sn.z.rows * sizeof(cplx)) != 0);
}

TEST_CASE("receive matrix dump round trip")
{
    SweepSetup s;
    RadarConfig cfg = testsup::reference_radar(true);
    cfg.rng_seed = 0xDEADBEEFCAFE1234ULL;
    SensingMatrix sm = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 1);

    testsup::TempDir tmp;
    write_z_dump(sm, tmp.file("z.bin"));

    std::string blob = testsup::slurp(tmp.file("z.bin"));
    REQUIRE(blob.size() == 32 + sm.z.data.size() * sizeof(cplx));
    CHECK(blob.compare(0, 4, "RISZ") == 0);
    std::uint32_t rows, cols;
    std::uint64_t seed;
    std::memcpy(&rows, blob.data() + 4, 4);
    std::memcpy(&cols, blob.data() + 8, 4);
    std::memcpy(&seed, blob.data() + 12, 8);
    CHECK(rows == 512);
    CHECK(cols == 16);
    CHECK(seed == cfg.rng_seed);

    ZDump dump = read_z_dump(tmp.file("z.bin"));
    CHECK(dump.seed == cfg.rng_seed);
    CHECK(dump.z.rows == sm.z.rows);
    CHECK(dump.z.cols == sm.z.cols);
    CHECK(dump.z.data == sm.z.data);
}

TEST_CASE("corrupt dumps are rejected")
{
    testsup::TempDir tmp;

    std::ofstream(tmp.file("bad.bin"), std::ios::binary) << "JUNKJUNKJUNK";
    CHECK_THROWS_AS(read_z_dump(tmp.file("bad.bin")), ParseError);

    SweepSetup s;
    RadarConfig cfg = testsup::reference_radar(false);
    SensingMatrix sm = sweep(s.paths, s.cb, s.fc, s.geom, s.patterns, cfg, 1);
    write_z_dump(sm, tmp.file("z.bin"));
    std::string blob = testsup::slurp(tmp.file("z.bin"));
    std::ofstream(tmp.file("cut.bin"), std::ios::binary)
        .write(blob.data(), static_cast<std::streamsize>(blob.size() / 2));
    CHECK_THROWS_AS(read_z_dump(tmp.file("cut.bin")), ParseError);

    CHECK_THROWS_AS(read_z_dump(tmp.file("missing.bin")), IoError);
}
