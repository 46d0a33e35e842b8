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

#include "vlcmux/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

namespace vlcmux {

RateModel::RateModel(const SceneConfig& scene)
    : channel_(scene),
      clip_(clipping_stats(scene.system.clip_level)),
      noise_{scene.system.load_resistance, scene.system.temperature, scene.system.front_end.signalling_bandwidth()},
      power_(uniform_power_allocation(scene.system.front_end.fft_size))
{
}

SnrGrid RateModel::snr(const UeState& ue) const
{
    const SceneConfig& scene = channel_.scene();
    const ChannelSnapshot snap = channel_.evaluate(ue);
    std::vector<double> noise(snap.photocurrent.size());
    std::transform(snap.photocurrent.begin(), snap.photocurrent.end(), noise.begin(),
                   [&](double i) { return receiver_noise(i, noise_); });
    const MultiplexSet m = scene.processing == Processing::Svd ? svd_multiplexers(snap.tensor, scene.streams())
                                                               : identity_multiplexers(snap.tensor);
    return snr_grid(snap.tensor, m, clip_, noise, power_);
}

double RateModel::rate(const UeState& ue) const
{
    const SystemParameters& sys = channel_.scene().system;
    return achievable_rate(snr(ue), sys.gap_linear(), sys.front_end.symbol_period, sys.front_end.fft_size,
                           sys.front_end.cyclic_prefix);
}

UeState ue_for_sample(const RoomConfig& room, const McConfig& mc, int index)
{
    Rng rng = Rng::for_stream(mc.seed, static_cast<std::uint64_t>(index));
    return sample_ue(rng, room, mc.orientation);
}

RateEstimate summarize(std::vector<double> rates, bool keep_samples)
{
    RateEstimate est;
    est.samples = static_cast<int>(rates.size());
    if (rates.empty())
        return est;
    double sum = 0.0;
    for (double r : rates)
        sum += r;
    est.mean = sum / est.samples;
    if (est.samples > 1) {
        double ss = 0.0;
        for (double r : rates)
            ss += (r - est.mean) * (r - est.mean);
        est.standard_error = std::sqrt(ss / (est.samples - 1)) / std::sqrt(static_cast<double>(est.samples));
    }
    if (keep_samples)
        est.per_sample = std::move(rates);
    return est;
}

RateEstimate average_rate(const SceneConfig& scene, const McConfig& mc)
{
    if (mc.samples < 1)
        throw std::invalid_argument("Monte Carlo sample count must be >= 1");
    mc.orientation.validate();
    const RateModel model(scene);
    const RoomConfig& room = scene.system.room;

    std::vector<double> rates(mc.samples);
    std::vector<std::exception_ptr> errors(mc.samples);
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            try {
                rates[i] = model.rate(ue_for_sample(room, mc, i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const int threads = std::clamp(mc.threads, 1, mc.samples);
    if (threads == 1) {
        work(0, mc.samples);
    } else {
        std::vector<std::jthread> pool;
        const int chunk = (mc.samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, t * chunk, std::min(mc.samples, (t + 1) * chunk));
    }

    for (int i = 0; i < mc.samples; ++i) {
        if (!errors[i])
            continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            throw SampleError(i, e.what());
        }
    }
    return summarize(std::move(rates), mc.keep_samples);
}

const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::Sd:
        return "SD";
    case Variant::Wd:
        return "WD";
    case Variant::WdNoProcessing:
        return "WD-noproc";
    case Variant::Scwd:
        return "SCWD";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& name)
{
    for (Variant v : {Variant::Sd, Variant::Wd, Variant::WdNoProcessing, Variant::Scwd})
        if (name == variant_name(v))
            return v;
    return std::nullopt;
}

std::vector<SweepRow> sweep_elements(const SweepSpec& spec, const SystemParameters& system, const McConfig& mc)
{
    if (spec.first < 1 || spec.last > 16 || spec.first > spec.last)
        throw std::invalid_argument("element range must lie within 1..16");
    std::vector<SweepRow> rows;
    for (int n = spec.first; n <= spec.last; ++n) {
        for (Variant v : spec.variants) {
            SweepRow row{n, v, {}, mc.seed, 0};
            switch (v) {
            case Variant::Sd:
                row.estimate = average_rate(empirical_sd(n, system, spec.receiver), mc);
                break;
            case Variant::Wd:
            case Variant::WdNoProcessing:
                row.estimate = average_rate(empirical_wd(n, system, v == Variant::Wd), mc);
                break;
            case Variant::Scwd: {
                std::vector<RateEstimate> per_l;
                const ClusterSelection best = scwd_best_over_L(n, [&](int l) {
                    per_l.push_back(average_rate(empirical_scwd(n, l, system, spec.receiver), mc));
                    return per_l.back().mean;
                });
                row.estimate = per_l[best.clusters - 1];
                row.best_clusters = best.clusters;
                break;
            }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "I,variant,mean_bps,stderr_bps,n_mc,seed,best_l\n";
    out.precision(17);
    for (const auto& r : rows) {
        out << r.elements << ',' << variant_name(r.variant) << ',' << r.estimate.mean << ','
            << r.estimate.standard_error << ',' << r.estimate.samples << ',' << r.seed << ',';
        if (r.variant == Variant::Scwd)
            out << r.best_clusters;
        out << '\n';
    }
}

} // namespace vlcmux
