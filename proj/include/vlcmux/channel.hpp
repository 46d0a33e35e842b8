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

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "vlcmux/geometry.hpp"
#include "vlcmux/scene.hpp"
#include "vlcmux/spectra.hpp"

namespace vlcmux {

using cdouble = std::complex<double>;

/// Drive-signal to optical-power mapping of one LED under symmetric clipping
/// at +/- clip_level with zero minimum optical power.
struct ElectroOpticMap {
    double scale;      // W per unit signal
    double bias;       // W
    double mean_power; // W
    double clip_level;
};

ElectroOpticMap eo_map(double mean_power, double clip_level);

/// Root-raised-cosine amplitude response normalized to one at DC.
double rrc_gain(double f, double rolloff, double symbol_period);

/// First-order low-pass section with the given 3 dB corner.
cdouble front_end_gain(double f, double corner);

/// m = -1 / log2(cos(half-power semiangle)).
double lambertian_order(double half_power_angle);

/// Line-of-sight DC gain (A per W of emitted power, scaled by the spectral
/// gain already evaluated at this link's incidence angle).
double los_baseband_gain(const LinkGeometry& link, double lambertian, double fov_order, double pd_area,
                         double spectral);

/// Per-subcarrier MIMO channel, H[k](n_r, n_t) for k = 0..K-1.
class ChannelTensor {
public:
    ChannelTensor() = default;
    ChannelTensor(int subcarriers, int receivers, int transmitters);

    int subcarriers() const { return k_; }
    int receivers() const { return nr_; }
    int transmitters() const { return nt_; }

    cdouble& operator()(int k, int r, int t) { return data_[index(k, r, t)]; }
    const cdouble& operator()(int k, int r, int t) const { return data_[index(k, r, t)]; }

    Eigen::MatrixXcd matrix(int k) const;

private:
    std::size_t index(int k, int r, int t) const
    {
        return (static_cast<std::size_t>(k) * nr_ + r) * nt_ + t;
    }

    int k_ = 0;
    int nr_ = 0;
    int nt_ = 0;
    std::vector<cdouble> data_;
};

struct ChannelSnapshot {
    ChannelTensor tensor;
    std::vector<double> photocurrent; // DC photocurrent per PD, A
};

/// Precomputed channel builder for one scene. Construction validates the
/// scene and tabulates everything that does not depend on the UE pose.
class ChannelModel {
public:
    explicit ChannelModel(const SceneConfig& scene);

    ChannelSnapshot evaluate(const UeState& ue) const;

    const SceneConfig& scene() const { return scene_; }
    const std::vector<ElectroOpticMap>& eo() const { return eo_; }

private:
    SceneConfig scene_;
    std::vector<ElectroOpticMap> eo_;
    std::vector<std::size_t> table_of_led_;
    std::vector<SpectralGainTable> tables_;
    // pulse * LED * PD response at f_k (direct term) and f_k - 1/T_s (first alias)
    std::vector<cdouble> direct_;
    std::vector<cdouble> alias_;
    double lambertian_;
};

/// H[k] = H(f_k) + H(f_k - 1/T_s) for every LED/PD pair, LoS only.
ChannelTensor subcarrier_channel(const SceneConfig& scene, const UeState& ue);

/// Average photocurrent per PD from the LED DC biases.
std::vector<double> dc_photocurrent(const SceneConfig& scene, const UeState& ue);

} // namespace vlcmux
