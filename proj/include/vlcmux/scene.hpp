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

#include <algorithm>
#include <vector>

#include "vlcmux/geometry.hpp"
#include "vlcmux/spectra.hpp"

namespace vlcmux {

/// Transmit/receive front-end and OFDM framing.
struct FrontEndModel {
    double led_bandwidth = 35e6;   // 3 dB, Hz
    double pd_bandwidth = 106e6;   // 3 dB, Hz
    double rrc_rolloff = 0.2;
    double symbol_period = 10e-9;  // 1 / (2 * 50 MHz)
    int fft_size = 256;
    int cyclic_prefix = 30;

    double signalling_bandwidth() const { return 1.0 / (2.0 * symbol_period); }
    int data_subcarriers() const { return fft_size / 2 - 1; }
    void validate() const;
};

/// Parameters common to every strategy; defaults reproduce the reference
/// indoor scenario (5 x 5 x 3 m room, 80 W total optical power).
struct SystemParameters {
    RoomConfig room;
    FrontEndModel front_end;
    double load_resistance = 50.0; // ohm
    double temperature = 300.0;    // K
    double total_power = 80.0;     // W, optical
    double clip_level = 3.2;       // in signal standard deviations
    double pd_area = 1e-4;         // m^2
    ResponsivityModel responsivity;
    double effective_index = 2.0;
    double filter_transmittance = 1.0;
    double band_min_nm = 400.0;
    double band_max_nm = 700.0;
    double gap_db = 6.06;

    WavelengthRange band() const;
    double gap_linear() const;
    void validate() const;
};

struct LedElement {
    Vec2 xy;                  // ceiling coordinates, m; height is room.tx_height
    double wavelength = 550e-9;
    double mean_power = 0.0;  // W
};

struct PdElement {
    Vec3 body_orientation{0.0, 0.0, 1.0};
    FilterSpec filter;
};

bool operator==(const RoomConfig&, const RoomConfig&);
bool operator==(const FrontEndModel&, const FrontEndModel&);
bool operator==(const SystemParameters&, const SystemParameters&);
bool operator==(const LedElement&, const LedElement&);
bool operator==(const PdElement&, const PdElement&);

enum class Processing { Svd, Identity };

/// Complete transmitter/receiver description for one strategy instance.
struct SceneConfig {
    SystemParameters system;
    std::vector<LedElement> leds;
    std::vector<PdElement> pds;
    double half_power_angle = 1.0471975511965976; // 60 degrees
    double fov_order = 1.4738;
    Processing processing = Processing::Svd;

    int streams() const { return static_cast<int>(std::min(leds.size(), pds.size())); }
    double lambertian_order() const;
    void validate() const;

    bool operator==(const SceneConfig&) const = default;
};

} // namespace vlcmux
