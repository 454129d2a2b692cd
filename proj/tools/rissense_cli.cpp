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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rissense/pipeline.hpp"

namespace {

struct CliArgs {
    std::string config;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = -1;
    std::string z_dump;
    std::string replay;
    std::string upscale;
    std::string window;
    std::string interp;
};

// "WxH" -> pair; throws CLI::ValidationError on anything else.
std::pair<int, int> parse_upscale(const std::string& s)
{
    int w = 0, h = 0;
    char extra;
    if (std::sscanf(s.c_str(), "%dx%d%c", &w, &h, &extra) != 2 || w < 1 || h < 1)
        throw CLI::ValidationError("--upscale", "expected WxH, e.g. 120x120");
    return {w, h};
}

rissense::PipelineOptions make_options(const CliArgs& args)
{
    rissense::PipelineOptions opt;
    if (args.seed_set)
        opt.seed = args.seed;
    if (args.workers >= 0)
        opt.workers = args.workers;
    if (!args.z_dump.empty())
        opt.z_dump = args.z_dump;
    if (!args.replay.empty())
        opt.replay = args.replay;
    if (!args.upscale.empty())
        opt.upscale = parse_upscale(args.upscale);
    if (args.window == "rect")
        opt.window = rissense::Window::Rect;
    else if (args.window == "hann")
        opt.window = rissense::Window::Hann;
    if (args.interp == "nearest")
        opt.interp = rissense::Interp::Nearest;
    else if (args.interp == "bilinear")
        opt.interp = rissense::Interp::Bilinear;
    opt.progress = [](const std::string& msg) { std::cerr << "[rissense] " << msg << "\n"; };
    return opt;
}

int cmd_run(const CliArgs& args)
{
    try
    {
        rissense::RunConfig cfg = rissense::load_run_config(args.config);
        rissense::RunResult res = rissense::run_pipeline(cfg, make_options(args));
        std::cout << rissense::format_summary(cfg, res);
        return 0;
    }
    catch (const std::exception& e)
    {
        nlohmann::json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
}

int cmd_validate(const CliArgs& args)
{
    try
    {
        rissense::RunConfig cfg = rissense::load_run_config(args.config);
        auto violations = rissense::validate_run_config(cfg);
        if (violations.empty())
        {
            auto derived = rissense::derived_params(cfg.radar);
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "ok: bandwidth %.6g GHz, range resolution %.6g m, max range %.6g m, "
                          "chirp rate %.6g kHz\n",
                          derived.bandwidth / 1e9, derived.range_res, derived.max_range,
                          derived.chirp_rate / 1e3);
            std::cout << buf;
            return 0;
        }
        for (const std::string& v : violations)
            std::cout << "violation: " << v << "\n";
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"RIS-aided FMCW radar simulator and depth map estimator"};
    app.require_subcommand(1);

    CliArgs args;

    CLI::App* run = app.add_subcommand("run", "simulate a config and write its artifacts");
    run->add_option("config", args.config, "run configuration (JSON)")->required();
    run->add_option("--seed", args.seed, "override the noise seed")
        ->each([&](const std::string&) { args.seed_set = true; });
    run->add_option("--workers", args.workers, "worker threads (0 = all cores)");
    run->add_option("--z-dump", args.z_dump, "dump the raw receive matrix to this file");
    run->add_option("--replay", args.replay, "process a dumped receive matrix instead of sweeping");
    run->add_option("--upscale", args.upscale, "resample the depth map to WxH");
    run->add_option("--window", args.window, "fast-time window")
        ->check(CLI::IsMember({"rect", "hann"}));
    run->add_option("--interp", args.interp, "upscale interpolation")
        ->check(CLI::IsMember({"nearest", "bilinear"}));

    CLI::App* validate = app.add_subcommand("validate", "check a config without running it");
    validate->add_option("config", args.config, "run configuration (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return cmd_run(args);
    return cmd_validate(args);
}
