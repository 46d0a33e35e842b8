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

#include "vlcmux/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "vlcmux/units.hpp"

namespace vlcmux {

ElectroOpticMap eo_map(double mean_power, double clip_level)
{
    if (!(mean_power > 0.0 && clip_level > 0.0))
        throw std::invalid_argument("eo_map: mean power and clipping level must be positive");
    return {mean_power / clip_level, mean_power, mean_power, clip_level};
}

double rrc_gain(double f, double rolloff, double symbol_period)
{
    const double af = std::abs(f);
    const double flat = (1.0 - rolloff) / (2.0 * symbol_period);
    const double edge = (1.0 + rolloff) / (2.0 * symbol_period);
    if (af <= flat)
        return 1.0;
    if (af >= edge)
        return 0.0;
    return std::sqrt(0.5 * (1.0 + std::cos(pi * symbol_period / rolloff * (af - flat))));
}

cdouble front_end_gain(double f, double corner)
{
    return 1.0 / cdouble(1.0, f / corner);
}

double lambertian_order(double half_power_angle)
{
    return -1.0 / std::log2(std::cos(half_power_angle));
}

double los_baseband_gain(const LinkGeometry& link, double lambertian, double fov_order, double pd_area,
                         double spectral)
{
    if (!link.visible)
        return 0.0;
    return (lambertian + 1.0) * pd_area / (2.0 * pi * link.distance * link.distance)
           * std::pow(link.cos_radiant, lambertian) * std::pow(link.cos_incident, fov_order) * spectral;
}

ChannelTensor::ChannelTensor(int subcarriers, int receivers, int transmitters)
    : k_(subcarriers), nr_(receivers), nt_(transmitters),
      data_(static_cast<std::size_t>(subcarriers) * receivers * transmitters)
{
}

Eigen::MatrixXcd ChannelTensor::matrix(int k) const
{
    Eigen::MatrixXcd m(nr_, nt_);
    for (int r = 0; r < nr_; ++r)
        for (int t = 0; t < nt_; ++t)
            m(r, t) = (*this)(k, r, t);
    return m;
}

ChannelModel::ChannelModel(const SceneConfig& scene) : scene_(scene)
{
    scene_.validate();
    const SystemParameters& sys = scene_.system;
    for (const auto& led : scene_.leds) {
        eo_.push_back(eo_map(led.mean_power, sys.clip_level));
        std::size_t idx = tables_.size();
        for (std::size_t j = 0; j < tables_.size(); ++j)
            if (tables_[j].led().center == led.wavelength)
                idx = j;
        if (idx == tables_.size())
            tables_.emplace_back(LedSpectrum::centered_at(led.wavelength), sys.responsivity, sys.band());
        table_of_led_.push_back(idx);
    }
    lambertian_ = scene_.lambertian_order();

    const FrontEndModel& fe = sys.front_end;
    const int K = fe.fft_size;
    const double ts = fe.symbol_period;
    auto response = [&](double f) {
        const double g = rrc_gain(f, fe.rrc_rolloff, ts);
        if (g == 0.0)
            return cdouble(0.0);
        return g * g * front_end_gain(f, fe.led_bandwidth) * front_end_gain(f, fe.pd_bandwidth);
    };
    direct_.resize(K);
    alias_.resize(K);
    for (int k = 0; k < K; ++k) {
        const double fk = k / (K * ts);
        direct_[k] = response(fk);
        alias_[k] = response(fk - 1.0 / ts);
    }
}

ChannelSnapshot ChannelModel::evaluate(const UeState& ue) const
{
    const SystemParameters& sys = scene_.system;
    const FrontEndModel& fe = sys.front_end;
    const int K = fe.fft_size;
    const int nr = static_cast<int>(scene_.pds.size());
    const int nt = static_cast<int>(scene_.leds.size());
    const double ts = fe.symbol_period;

    ChannelSnapshot snap{ChannelTensor(K, nr, nt), std::vector<double>(nr, 0.0)};
    const Vec3 rx_pos(ue.x, ue.y, sys.room.rx_height);
    const Vec3 down(0.0, 0.0, -1.0);

    for (int r = 0; r < nr; ++r) {
        const PdElement& pd_el = scene_.pds[r];
        const Pose pd{rx_pos, orient_pd(pd_el.body_orientation, ue)};
        FilterSpec filter = pd_el.filter;
        for (int t = 0; t < nt; ++t) {
            const LedElement& led_el = scene_.leds[t];
            const Pose led{Vec3(led_el.xy.x(), led_el.xy.y(), sys.room.tx_height), down};
            const LinkGeometry link = link_geometry(led, pd);
            if (!link.visible)
                continue;
            const double spectral = tables_[table_of_led_[t]].gain(filter, std::acos(std::min(link.cos_incident, 1.0)));
            const double gain = los_baseband_gain(link, lambertian_, scene_.fov_order, sys.pd_area, spectral);
            if (gain == 0.0)
                continue;
            const ElectroOpticMap& eo = eo_[t];
            snap.photocurrent[r] += eo.bias * gain;
            // NLoS contributions would be added to the per-link response here.
            const double tau = link.distance / constants::speed_of_light;
            const double amp = eo.scale * gain;
            snap.tensor(0, r, t) = eo.bias * gain;
            for (int k = 1; k < K; ++k) {
                const double fk = k / (K * ts);
                cdouble h(0.0);
                if (direct_[k] != 0.0)
                    h += direct_[k] * std::polar(1.0, -2.0 * pi * fk * tau);
                if (alias_[k] != 0.0)
                    h += alias_[k] * std::polar(1.0, -2.0 * pi * (fk - 1.0 / ts) * tau);
                snap.tensor(k, r, t) = amp * h;
            }
        }
    }
    return snap;
}

ChannelTensor subcarrier_channel(const SceneConfig& scene, const UeState& ue)
{
    return ChannelModel(scene).evaluate(ue).tensor;
}

std::vector<double> dc_photocurrent(const SceneConfig& scene, const UeState& ue)
{
    return ChannelModel(scene).evaluate(ue).photocurrent;
}

} // namespace vlcmux
