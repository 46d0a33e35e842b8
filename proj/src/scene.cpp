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

#include "vlcmux/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlcmux {

void FrontEndModel::validate() const
{
    if (fft_size < 4 || (fft_size & (fft_size - 1)) != 0)
        throw std::invalid_argument("FFT size must be a power of two >= 4");
    if (!(cyclic_prefix > 0 && cyclic_prefix < fft_size))
        throw std::invalid_argument("cyclic prefix must satisfy 0 < N_cp < K");
    if (!(symbol_period > 0.0))
        throw std::invalid_argument("symbol period must be positive");
    if (!(rrc_rolloff >= 0.0 && rrc_rolloff <= 1.0))
        throw std::invalid_argument("RRC roll-off must lie in [0, 1]");
    if (!(led_bandwidth > 0.0 && pd_bandwidth > 0.0))
        throw std::invalid_argument("front-end 3 dB bandwidths must be positive");
}

WavelengthRange SystemParameters::band() const
{
    return {band_min_nm * 1e-9, band_max_nm * 1e-9};
}

double SystemParameters::gap_linear() const
{
    return std::pow(10.0, gap_db / 10.0);
}

void SystemParameters::validate() const
{
    room.validate();
    front_end.validate();
    if (!(load_resistance > 0.0 && temperature > 0.0))
        throw std::invalid_argument("load resistance and temperature must be positive");
    if (!(total_power > 0.0 && clip_level > 0.0 && pd_area > 0.0))
        throw std::invalid_argument("power, clipping level and PD area must be positive");
    if (!(responsivity.quantum_efficiency >= 0.0 && responsivity.quantum_efficiency <= 1.0))
        throw std::invalid_argument("quantum efficiency must lie in [0, 1]");
    if (!(band_max_nm > band_min_nm && band_min_nm > 0.0))
        throw std::invalid_argument("wavelength range must be positive and non-empty");
    if (!(gap_db >= 0.0))
        throw std::invalid_argument("gap factor must be >= 0 dB");
}

double SceneConfig::lambertian_order() const
{
    return -1.0 / std::log2(std::cos(half_power_angle));
}

void SceneConfig::validate() const
{
    system.validate();
    if (leds.empty() || pds.empty())
        throw std::invalid_argument("scene needs at least one LED and one PD");
    if (!(half_power_angle > 0.0 && half_power_angle < 1.5707963267948966))
        throw std::invalid_argument("half-power semiangle must lie in (0, 90) degrees");
    if (!(fov_order >= 1.0))
        throw std::invalid_argument("FoV coefficient must be >= 1");
    if (processing == Processing::Identity && leds.size() != pds.size())
        throw std::invalid_argument("identity processing needs equal LED and PD counts");
    const RoomConfig& room = system.room;
    for (std::size_t n = 0; n < leds.size(); ++n) {
        const auto& led = leds[n];
        if (!(led.xy.x() >= 0.0 && led.xy.x() <= room.width && led.xy.y() >= 0.0 && led.xy.y() <= room.length))
            throw std::invalid_argument("LED " + std::to_string(n + 1) + " lies outside the room footprint");
        if (!(led.mean_power > 0.0) || !(led.wavelength > 0.0))
            throw std::invalid_argument("LED " + std::to_string(n + 1) + " needs positive power and wavelength");
    }
    for (const auto& pd : pds) {
        if (std::abs(pd.body_orientation.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("PD orientation must be a unit vector");
        pd.filter.validate();
    }
}

bool operator==(const RoomConfig& a, const RoomConfig& b)
{
    return a.width == b.width && a.length == b.length && a.height == b.height && a.tx_height == b.tx_height
           && a.rx_height == b.rx_height;
}

bool operator==(const FrontEndModel& a, const FrontEndModel& b)
{
    return a.led_bandwidth == b.led_bandwidth && a.pd_bandwidth == b.pd_bandwidth && a.rrc_rolloff == b.rrc_rolloff
           && a.symbol_period == b.symbol_period && a.fft_size == b.fft_size && a.cyclic_prefix == b.cyclic_prefix;
}

bool operator==(const SystemParameters& a, const SystemParameters& b)
{
    return a.room == b.room && a.front_end == b.front_end && a.load_resistance == b.load_resistance
           && a.temperature == b.temperature && a.total_power == b.total_power && a.clip_level == b.clip_level
           && a.pd_area == b.pd_area && a.responsivity.quantum_efficiency == b.responsivity.quantum_efficiency
           && a.effective_index == b.effective_index && a.filter_transmittance == b.filter_transmittance
           && a.band_min_nm == b.band_min_nm && a.band_max_nm == b.band_max_nm && a.gap_db == b.gap_db;
}

bool operator==(const LedElement& a, const LedElement& b)
{
    return a.xy == b.xy && a.wavelength == b.wavelength && a.mean_power == b.mean_power;
}

bool operator==(const PdElement& a, const PdElement& b)
{
    return a.body_orientation == b.body_orientation && a.filter.center == b.filter.center
           && a.filter.width == b.filter.width && a.filter.effective_index == b.filter.effective_index
           && a.filter.transmittance == b.filter.transmittance;
}

} // namespace vlcmux
