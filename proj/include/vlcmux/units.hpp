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

#include <numbers>

namespace vlcmux {

// Physical constants, rounded to the values used throughout the link model.
namespace constants {
inline constexpr double boltzmann = 1.38e-23;      // J/K
inline constexpr double planck = 6.63e-34;         // J/Hz
inline constexpr double speed_of_light = 3.0e8;    // m/s
inline constexpr double electron_charge = 1.6e-19; // C
} // namespace constants

inline constexpr double pi = std::numbers::pi;

// Boundary conversions. Everything past the config layer is SI and radians.
constexpr double from_nm(double nm) { return nm * 1e-9; }
constexpr double to_nm(double m) { return m * 1e9; }
constexpr double from_deg(double deg) { return deg * (pi / 180.0); }
constexpr double to_deg(double rad) { return rad * (180.0 / pi); }
constexpr double from_mhz(double mhz) { return mhz * 1e6; }

} // namespace vlcmux
