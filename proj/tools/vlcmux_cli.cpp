// SPDX-License-Identifier: Apache-2.0
//
// vlcmux - space and wavelength multiplexing simulator for VLC MIMO-OFDM links
// Copyright (C) 2026 The vlcmux authors
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

// Command-line front end: eval, sweep, optimize and channel subcommands.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "vlcmux/channel.hpp"
#include "vlcmux/evaluator.hpp"
#include "vlcmux/optimizer.hpp"
#include "vlcmux/plot.hpp"
#include "vlcmux/problems.hpp"
#include "vlcmux/scenario.hpp"
#include "vlcmux/units.hpp"

namespace fs = std::filesystem;
using namespace vlcmux;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::string out_dir = ".";
};

// Files written by the current command; removed again if the command fails.
class Outputs {
public:
    explicit Outputs(const std::string& dir) : dir_(dir) {}

    void write(const std::string& name, const std::string& content)
    {
        fs::create_directories(dir_);
        const fs::path path = dir_ / name;
        written_.push_back(path);
        std::ofstream out(path, std::ios::binary);
        out << content;
        out.close();
        if (!out)
            throw std::runtime_error("failed to write " + path.string());
        std::cout << "wrote " << path.string() << '\n';
    }

    void discard() noexcept
    {
        for (const auto& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        written_.clear();
    }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

Scenario load(const std::string& path, const Globals& g)
{
    Scenario sc = load_scenario(path);
    if (g.seed)
        sc.monte_carlo.seed = *g.seed;
    return sc;
}

std::string fmt_mbps(double bps)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << bps / 1e6;
    return s.str();
}

void cmd_eval(const std::string& path, const Globals& g, Outputs& out)
{
    const Scenario sc = load(path, g);
    const SystemParameters sys = sc.system();
    const McConfig mc = sc.mc(g.threads);

    RateEstimate est;
    int clusters = 0;
    if (sc.strategy.variant == Family::Scwd && !sc.strategy.clusters && !sc.strategy.parameters) {
        std::vector<RateEstimate> per_l;
        const ClusterSelection best = scwd_best_over_L(sc.strategy.elements, [&](int l) {
            per_l.push_back(average_rate(build_scene(sc.strategy_config(l), sys), mc));
            std::cout << "  L=" << l << ": " << fmt_mbps(per_l.back().mean) << " Mbit/s\n";
            return per_l.back().mean;
        });
        est = per_l[static_cast<std::size_t>(best.clusters - 1)];
        clusters = best.clusters;
    } else {
        const StrategyConfig cfg = sc.strategy_config();
        if (const auto* s = std::get_if<ScwdStrategy>(&cfg))
            clusters = s->clusters();
        est = average_rate(build_scene(cfg, sys), mc);
    }

    std::cout << family_name(sc.strategy.variant) << " I=" << sc.strategy.elements;
    if (clusters > 0)
        std::cout << " L=" << clusters;
    std::cout << ": " << fmt_mbps(est.mean) << " +- " << fmt_mbps(est.standard_error) << " Mbit/s (n=" << est.samples
              << ", seed=" << mc.seed << ")\n";

    std::ostringstream csv;
    csv.precision(17);
    csv << "variant,I,L,mean_bps,stderr_bps,n_mc,seed\n";
    csv << family_name(sc.strategy.variant) << ',' << sc.strategy.elements << ',';
    if (clusters > 0)
        csv << clusters;
    csv << ',' << est.mean << ',' << est.standard_error << ',' << est.samples << ',' << mc.seed << '\n';
    out.write("eval.csv", csv.str());
}

void cmd_sweep(const std::string& path, int first, int last, const std::vector<std::string>& variants, bool plot,
               const Globals& g, Outputs& out)
{
    const Scenario sc = load(path, g);
    SweepSpec spec;
    spec.first = first;
    spec.last = last;
    spec.receiver = sc.receiver.kind;
    if (!variants.empty()) {
        spec.variants.clear();
        for (const auto& name : variants) {
            const auto v = parse_variant(name);
            if (!v)
                throw std::invalid_argument("--variants: unknown variant \"" + name + "\"");
            spec.variants.push_back(*v);
        }
    }
    const auto rows = sweep_elements(spec, sc.system(), sc.mc(g.threads));
    for (const auto& r : rows) {
        std::cout << "I=" << r.elements << ' ' << variant_name(r.variant) << ": " << fmt_mbps(r.estimate.mean)
                  << " +- " << fmt_mbps(r.estimate.standard_error) << " Mbit/s";
        if (r.variant == Variant::Scwd)
            std::cout << " (L=" << r.best_clusters << ')';
        std::cout << '\n';
    }
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    out.write("sweep.csv", csv.str());
    if (plot) {
        std::ostringstream svg;
        write_sweep_svg(svg, rows);
        out.write("sweep.svg", svg.str());
    }
}

void cmd_optimize(const std::string& path, const Globals& g, Outputs& out)
{
    const Scenario sc = load(path, g);
    const SystemParameters sys = sc.system();
    McConfig mc = sc.mc(g.threads);
    mc.samples = sc.optimizer.samples;
    const int n = sc.strategy.elements;

    std::vector<int> cluster_counts{0};
    if (sc.strategy.variant == Family::Scwd) {
        cluster_counts.clear();
        if (sc.strategy.clusters)
            cluster_counts.push_back(*sc.strategy.clusters);
        else if (sc.strategy.parameters)
            cluster_counts.push_back(std::get<ScwdStrategy>(*sc.strategy.parameters).clusters());
        else
            for (int l = 1; l <= n; ++l)
                cluster_counts.push_back(l);
    }

    std::optional<OptimizeResult> best;
    std::optional<StrategyConfig> best_cfg;
    for (int l : cluster_counts) {
        StrategyProblem p;
        switch (sc.strategy.variant) {
        case Family::Sd:
            p = problem_sd(n, sc.receiver.kind, sys, mc);
            break;
        case Family::Wd:
            p = problem_wd(n, sc.strategy.processing, sys, mc);
            break;
        case Family::Scwd:
            p = problem_scwd(n, l, sc.receiver.kind, sys, mc);
            break;
        }
        // the configured (or empirical) point is always one of the starts
        const Eigen::VectorXd x0 = p.bounds.clamp(p.encode(sc.strategy_config(l)));
        OptimizeResult r =
            multi_start(p.objective, p.bounds, sc.optimizer.starts, mc.seed, sc.optimizer_options(), {x0});
        std::cout << family_name(sc.strategy.variant) << " I=" << n;
        if (l > 0)
            std::cout << " L=" << l;
        std::cout << ": " << fmt_mbps(r.value) << " Mbit/s after " << r.evaluations << " evaluations\n";
        if (!best || r.value > best->value) {
            best_cfg = p.decode(r.x);
            best = std::move(r);
        }
    }

    Scenario result = sc;
    set_parameters(result, *best_cfg);
    result.monte_carlo.samples = mc.samples; // the sample set the optimum was found on
    result.validate();

    std::ostringstream trace;
    write_trace_csv(trace, best->trace);
    out.write("trace.csv", trace.str());
    out.write("best_scenario.json", serialize_scenario(result));
    std::cout << "best: " << fmt_mbps(best->value) << " Mbit/s\n";
}

void cmd_channel(const std::string& path, const UeState& ue, const Globals& g, Outputs& out)
{
    const Scenario sc = load(path, g);
    const int clusters = sc.strategy.clusters.value_or(1);
    const SceneConfig scene = build_scene(sc.strategy_config(clusters), sc.system());
    const ChannelTensor h = subcarrier_channel(scene, ue);

    std::ostringstream csv;
    csv.precision(17);
    csv << "k,n_r,n_t,re,im\n";
    for (int k = 0; k < h.subcarriers(); ++k)
        for (int r = 0; r < h.receivers(); ++r)
            for (int t = 0; t < h.transmitters(); ++t)
                csv << k << ',' << r << ',' << t << ',' << h(k, r, t).real() << ',' << h(k, r, t).imag() << '\n';
    out.write("channel.csv", csv.str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vlcmux: space and wavelength multiplexing simulator for VLC MIMO-OFDM links"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Override the Monte Carlo seed");
    app.add_option("--threads", g.threads, "Worker threads for Monte Carlo sampling")->check(CLI::PositiveNumber);
    app.add_option("--out-dir", g.out_dir, "Directory for output files");

    std::string scenario;

    auto* eval = app.add_subcommand("eval", "Average rate of the configured strategy");
    eval->add_option("scenario", scenario, "Scenario file (JSON)")->required();

    int first = 1, last = 16;
    std::vector<std::string> variants;
    bool plot = false;
    auto* sweep = app.add_subcommand("sweep", "Empirical strategies against the number of elements");
    sweep->add_option("scenario", scenario, "Scenario file (JSON)")->required();
    sweep->add_option("--first", first, "Smallest element count")->check(CLI::Range(1, 16));
    sweep->add_option("--last", last, "Largest element count")->check(CLI::Range(1, 16));
    sweep->add_option("--variants", variants, "Subset of SD, WD, WD-noproc, SCWD")->delimiter(',');
    sweep->add_flag("--plot", plot, "Also write sweep.svg");

    auto* optimize = app.add_subcommand("optimize", "Multi-start direct search over strategy parameters");
    optimize->add_option("scenario", scenario, "Scenario file (JSON)")->required();

    UeState ue{};
    double yaw_deg = 0.0, pitch_deg = 0.0, roll_deg = 0.0;
    auto* channel = app.add_subcommand("channel", "Dump the subcarrier channel for one UE pose");
    channel->add_option("scenario", scenario, "Scenario file (JSON)")->required();
    channel->add_option("--x", ue.x, "UE x position, m")->required();
    channel->add_option("--y", ue.y, "UE y position, m")->required();
    channel->add_option("--yaw-deg", yaw_deg, "Device yaw, degrees");
    channel->add_option("--pitch-deg", pitch_deg, "Device pitch, degrees");
    channel->add_option("--roll-deg", roll_deg, "Device roll, degrees");

    CLI11_PARSE(app, argc, argv);

    Outputs out(g.out_dir);
    try {
        if (*eval) {
            cmd_eval(scenario, g, out);
        } else if (*sweep) {
            cmd_sweep(scenario, first, last, variants, plot, g, out);
        } else if (*optimize) {
            cmd_optimize(scenario, g, out);
        } else if (*channel) {
            ue.yaw = from_deg(yaw_deg);
            ue.pitch = from_deg(pitch_deg);
            ue.roll = from_deg(roll_deg);
            ue.azimuth = ue.yaw + pi / 2;
            cmd_channel(scenario, ue, g, out);
        }
    } catch (const std::exception& e) {
        out.discard();
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
