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

// Shared helpers for the unit tests and the acceptance runner.

#pragma once

#include "vlcmux/geometry.hpp"
#include "vlcmux/random.hpp"
#include "vlcmux/scene.hpp"
#include "vlcmux/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vlcmux::testing {

/// A random but valid scene: one of the three strategy families with random
/// positions, wavelengths, filters and receiver geometry.
inline SceneConfig random_scene(Rng& rng, const SystemParameters& sys = {})
{
    const int n = 1 + static_cast<int>(rng.uniform() * 6.0);
    const auto receiver = rng.uniform() < 0.5 ? ReceiverKind::Pyramid : ReceiverKind::Hemispheric;
    auto xy = [&] { return Vec2(rng.uniform(0.05, 0.95) * sys.room.width, rng.uniform(0.05, 0.95) * sys.room.length); };
    auto nm = [&] { return rng.uniform(sys.band_min_nm, sys.band_max_nm); };

    const double pick = rng.uniform();
    if (pick < 1.0 / 3.0) {
        SdStrategy s;
        for (int i = 0; i < n; ++i)
            s.led_xy.push_back(xy());
        s.half_power_deg = rng.uniform(10.0, 60.0);
        s.fov_order = rng.uniform(1.0, 4.0);
        s.receiver = receiver;
        s.theta_pd_deg = rng.uniform(0.0, 70.0);
        return build_scene(s, sys);
    }
    if (pick < 2.0 / 3.0) {
        WdStrategy s;
        for (int i = 0; i < n; ++i) {
            s.led_nm.push_back(nm());
            s.filter_nm.push_back(nm());
        }
        s.filter_width_nm = rng.uniform(20.0, 300.0);
        s.processing = rng.uniform() < 0.5;
        return build_scene(s, sys);
    }
    ScwdStrategy s;
    s.elements = n;
    const int l = 1 + static_cast<int>(rng.uniform() * n);
    const int m = (n + l - 1) / l;
    for (int i = 0; i < l; ++i)
        s.cluster_xy.push_back(xy());
    for (int i = 0; i < m; ++i) {
        s.led_nm.push_back(nm());
        s.filter_nm.push_back(nm());
    }
    s.filter_width_nm = rng.uniform(20.0, 300.0);
    s.half_power_deg = rng.uniform(10.0, 60.0);
    s.fov_order = rng.uniform(1.0, 4.0);
    s.receiver = receiver;
    s.theta_pd_deg = rng.uniform(0.0, 70.0);
    return build_scene(s, sys);
}

/// A user drawn from the hand-held orientation model, so tilted detectors
/// and partially visible links are common.
inline UeState random_ue(Rng& rng, const RoomConfig& room = {})
{
    return sample_ue(rng, room, OrientationModel::random_laplace());
}

/// Relative distance between two complex numbers, safe at zero.
inline double relative_gap(std::complex<double> a, std::complex<double> b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace vlcmux::testing
