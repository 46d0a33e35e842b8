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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlcmux/channel.hpp"
#include "vlcmux/geometry.hpp"
#include "vlcmux/link.hpp"
#include "vlcmux/scene.hpp"
#include "vlcmux/strategies.hpp"

namespace vlcmux {

struct McConfig {
    int samples = 500;
    std::uint64_t seed = 1;
    OrientationModel orientation = OrientationModel::upward();
    int threads = 1;
    bool keep_samples = false;
};

struct RateEstimate {
    double mean = 0.0;           // bit/s
    double standard_error = 0.0; // bit/s
    int samples = 0;
    std::vector<double> per_sample;
};

/// Raised when one Monte Carlo sample fails; carries the sample index.
class SampleError : public std::runtime_error {
public:
    SampleError(int index, const std::string& what)
        : std::runtime_error("sample " + std::to_string(index) + ": " + what), index_(index)
    {
    }
    int index() const { return index_; }

private:
    int index_;
};

/// Full channel -> SNR -> rate pipeline for one scene.
class RateModel {
public:
    explicit RateModel(const SceneConfig& scene);

    double rate(const UeState& ue) const;
    SnrGrid snr(const UeState& ue) const;

    const ChannelModel& channel() const { return channel_; }

private:
    ChannelModel channel_;
    ClippingStats clip_;
    NoiseModel noise_;
    double power_;
};

/// UE state for sample `index`; identical for every scene sharing the room,
/// which is what makes paired comparisons use common random numbers.
UeState ue_for_sample(const RoomConfig& room, const McConfig& mc, int index);

RateEstimate average_rate(const SceneConfig& scene, const McConfig& mc);

/// Sample mean and standard error of the mean, reduced in index order.
RateEstimate summarize(std::vector<double> rates, bool keep_samples);

enum class Variant { Sd, Wd, WdNoProcessing, Scwd };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

struct SweepRow {
    int elements;
    Variant variant;
    RateEstimate estimate;
    std::uint64_t seed;
    int best_clusters = 0; // SCWD only
};

struct SweepSpec {
    std::vector<Variant> variants{Variant::Sd, Variant::Wd, Variant::WdNoProcessing, Variant::Scwd};
    int first = 1;
    int last = 16;
    ReceiverKind receiver = ReceiverKind::Pyramid;
};

/// Empirical configurations for every (I, variant) cell. All cells share the
/// same UE samples.
std::vector<SweepRow> sweep_elements(const SweepSpec& spec, const SystemParameters& system, const McConfig& mc);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace vlcmux
