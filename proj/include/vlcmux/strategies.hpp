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

#include <functional>
#include <variant>
#include <vector>

#include "vlcmux/geometry.hpp"
#include "vlcmux/scene.hpp"

namespace vlcmux {

// Strategy parameters are kept in configuration units (m, nm, degrees) so a
// parameter set written to a scenario file rebuilds a bit-identical scene.

/// Space division: distinct LED positions, one common wavelength plan.
struct SdStrategy {
    std::vector<Vec2> led_xy;
    double half_power_deg = 60.0;
    double fov_order = 1.4738;
    ReceiverKind receiver = ReceiverKind::Pyramid;
    double theta_pd_deg = 40.0;
};

/// Wavelength division: co-located LEDs at the room centre, upward PDs.
struct WdStrategy {
    std::vector<double> led_nm;
    std::vector<double> filter_nm;
    double filter_width_nm = 300.0;
    bool processing = true;
};

/// Spatial clusters; wavelength division inside each cluster.
struct ScwdStrategy {
    int elements = 1;
    std::vector<Vec2> cluster_xy;   // L entries
    std::vector<double> led_nm;     // ceil(I/L) entries, shared by every cluster
    std::vector<double> filter_nm;  // ceil(I/L) entries
    double filter_width_nm = 300.0;
    double half_power_deg = 60.0;
    double fov_order = 1.4738;
    ReceiverKind receiver = ReceiverKind::Pyramid;
    double theta_pd_deg = 40.0;

    int clusters() const { return static_cast<int>(cluster_xy.size()); }
};

using StrategyConfig = std::variant<SdStrategy, WdStrategy, ScwdStrategy>;

int element_count(const StrategyConfig& strategy);

SceneConfig build_scene(const StrategyConfig& strategy, const SystemParameters& system);

/// Cluster sizes and element-to-(cluster, wavelength) assignment. Indices are
/// zero-based.
struct ClusterPlan {
    struct Slot {
        int cluster;
        int wavelength;
    };

    int clusters = 1;
    std::vector<int> sizes;
    std::vector<Slot> slots; // one per element
};

ClusterPlan cluster_plan(int elements, int clusters);

/// Deterministic ceiling layout for n in [1, 16]: centre for one LED, the
/// quarter points for four, otherwise a golden-angle sunflower of radius
/// min(W, L) / 3 about the centre.
std::vector<Vec2> layout_positions(int count, const RoomConfig& room);

/// Evenly spaced band plan over [min, max]: width (max - min) / n and
/// centres min + (m - 0.5) * width, all in nm.
struct WavelengthPlan {
    double width_nm;
    std::vector<double> centers_nm;
};

WavelengthPlan even_wavelength_plan(int divisions, double min_nm, double max_nm);

SdStrategy empirical_sd_strategy(int elements, const RoomConfig& room, ReceiverKind receiver);
WdStrategy empirical_wd_strategy(int elements, const SystemParameters& system, bool processing);
ScwdStrategy empirical_scwd_strategy(int elements, int clusters, const SystemParameters& system,
                                     ReceiverKind receiver);

SceneConfig empirical_sd(int elements, const SystemParameters& system, ReceiverKind receiver);
SceneConfig empirical_wd(int elements, const SystemParameters& system, bool processing);
SceneConfig empirical_scwd(int elements, int clusters, const SystemParameters& system, ReceiverKind receiver);

struct ClusterSelection {
    int clusters;
    double rate;
    std::vector<double> rates; // indexed by L - 1
};

/// Evaluates L = 1..elements and keeps the best; ties go to the smaller L.
ClusterSelection scwd_best_over_L(int elements, const std::function<double(int)>& rate_for_clusters);

} // namespace vlcmux
