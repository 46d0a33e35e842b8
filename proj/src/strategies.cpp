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

#include "vlcmux/strategies.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vlcmux/units.hpp"

namespace vlcmux {

namespace {

void check_elements(int elements)
{
    if (elements < 1 || elements > 16)
        throw std::invalid_argument("element count must lie in [1, 16], got " + std::to_string(elements));
}

FilterSpec make_filter(double center_nm, double width_nm, const SystemParameters& sys)
{
    return FilterSpec{from_nm(center_nm), from_nm(width_nm), sys.effective_index, sys.filter_transmittance};
}

std::vector<Vec3> receiver_orientations(ReceiverKind kind, int count, double theta_pd_deg)
{
    return ReceiverGeometry{kind, count, from_deg(theta_pd_deg)}.orientations();
}

SceneConfig scene_shell(const SystemParameters& sys, int elements, double half_power_deg, double fov_order)
{
    SceneConfig scene;
    scene.system = sys;
    scene.half_power_angle = from_deg(half_power_deg);
    scene.fov_order = fov_order;
    scene.leds.resize(elements);
    scene.pds.resize(elements);
    for (auto& led : scene.leds)
        led.mean_power = sys.total_power / elements;
    return scene;
}

constexpr double sd_wavelength_nm = 550.0;
constexpr double sd_filter_width_nm = 300.0;

SceneConfig build(const SdStrategy& s, const SystemParameters& sys)
{
    const int n = static_cast<int>(s.led_xy.size());
    check_elements(n);
    SceneConfig scene = scene_shell(sys, n, s.half_power_deg, s.fov_order);
    const auto orient = receiver_orientations(s.receiver, n, s.theta_pd_deg);
    for (int i = 0; i < n; ++i) {
        scene.leds[i].xy = s.led_xy[i];
        scene.leds[i].wavelength = from_nm(sd_wavelength_nm);
        scene.pds[i].body_orientation = orient[i];
        scene.pds[i].filter = make_filter(sd_wavelength_nm, sd_filter_width_nm, sys);
    }
    return scene;
}

SceneConfig build(const WdStrategy& s, const SystemParameters& sys)
{
    const int n = static_cast<int>(s.led_nm.size());
    check_elements(n);
    if (s.filter_nm.size() != s.led_nm.size())
        throw std::invalid_argument("WD strategy needs one filter centre per LED");
    SceneConfig scene = scene_shell(sys, n, 60.0, 1.4738);
    const Vec2 centre(sys.room.width / 2, sys.room.length / 2);
    for (int i = 0; i < n; ++i) {
        scene.leds[i].xy = centre;
        scene.leds[i].wavelength = from_nm(s.led_nm[i]);
        scene.pds[i].body_orientation = Vec3(0.0, 0.0, 1.0);
        scene.pds[i].filter = make_filter(s.filter_nm[i], s.filter_width_nm, sys);
    }
    scene.processing = s.processing ? Processing::Svd : Processing::Identity;
    return scene;
}

SceneConfig build(const ScwdStrategy& s, const SystemParameters& sys)
{
    check_elements(s.elements);
    const ClusterPlan plan = cluster_plan(s.elements, s.clusters());
    const auto divisions = static_cast<std::size_t>(plan.sizes.front());
    if (s.led_nm.size() != divisions || s.filter_nm.size() != divisions)
        throw std::invalid_argument("SCWD strategy needs ceil(I/L) = " + std::to_string(divisions)
                                    + " LED and filter wavelengths");
    SceneConfig scene = scene_shell(sys, s.elements, s.half_power_deg, s.fov_order);
    const auto orient = receiver_orientations(s.receiver, s.clusters(), s.theta_pd_deg);
    for (int i = 0; i < s.elements; ++i) {
        const auto slot = plan.slots[i];
        scene.leds[i].xy = s.cluster_xy[slot.cluster];
        scene.leds[i].wavelength = from_nm(s.led_nm[slot.wavelength]);
        scene.pds[i].body_orientation = orient[slot.cluster];
        scene.pds[i].filter = make_filter(s.filter_nm[slot.wavelength], s.filter_width_nm, sys);
    }
    return scene;
}

} // namespace

int element_count(const StrategyConfig& strategy)
{
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SdStrategy>)
                return static_cast<int>(s.led_xy.size());
            else if constexpr (std::is_same_v<T, WdStrategy>)
                return static_cast<int>(s.led_nm.size());
            else
                return s.elements;
        },
        strategy);
}

SceneConfig build_scene(const StrategyConfig& strategy, const SystemParameters& system)
{
    SceneConfig scene = std::visit([&](const auto& s) { return build(s, system); }, strategy);
    scene.validate();
    return scene;
}

ClusterPlan cluster_plan(int elements, int clusters)
{
    if (elements < 1)
        throw std::invalid_argument("cluster_plan: need at least one element");
    if (clusters < 1 || clusters > elements)
        throw std::invalid_argument("cluster_plan: cluster count must lie in [1, I]");
    ClusterPlan plan;
    plan.clusters = clusters;
    const int floor_size = elements / clusters;
    const int extra = elements % clusters;
    for (int l = 1; l <= clusters; ++l)
        plan.sizes.push_back(l <= extra ? floor_size + 1 : floor_size);

    // running-sum walk over elements
    int l = 0;
    int running = plan.sizes[0];
    for (int i = 1; i <= elements; ++i) {
        if (i > running) {
            ++l;
            running += plan.sizes[l];
        }
        const int m = i - running + plan.sizes[l];
        plan.slots.push_back({l, m - 1});
    }
    return plan;
}

std::vector<Vec2> layout_positions(int count, const RoomConfig& room)
{
    check_elements(count);
    const double w = room.width, len = room.length;
    const Vec2 centre(w / 2, len / 2);
    if (count == 1)
        return {centre};
    if (count == 4)
        return {{w / 4, len / 4}, {3 * w / 4, len / 4}, {w / 4, 3 * len / 4}, {3 * w / 4, 3 * len / 4}};
    const double radius = std::min(w, len) / 3.0;
    const double golden_angle = pi * (3.0 - std::sqrt(5.0));
    std::vector<Vec2> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double r = radius * std::sqrt((i + 0.5) / count);
        const double a = i * golden_angle;
        out.emplace_back(centre.x() + r * std::cos(a), centre.y() + r * std::sin(a));
    }
    return out;
}

WavelengthPlan even_wavelength_plan(int divisions, double lo, double hi)
{
    if (divisions < 1)
        throw std::invalid_argument("wavelength plan needs at least one division");
    WavelengthPlan plan{(hi - lo) / divisions, {}};
    for (int m = 1; m <= divisions; ++m)
        plan.centers_nm.push_back(lo + (m - 0.5) * plan.width_nm);
    return plan;
}

SdStrategy empirical_sd_strategy(int elements, const RoomConfig& room, ReceiverKind receiver)
{
    SdStrategy s;
    s.led_xy = layout_positions(elements, room);
    s.receiver = receiver;
    return s;
}

WdStrategy empirical_wd_strategy(int elements, const SystemParameters& system, bool processing)
{
    check_elements(elements);
    const WavelengthPlan plan = even_wavelength_plan(elements, system.band_min_nm, system.band_max_nm);
    return WdStrategy{plan.centers_nm, plan.centers_nm, plan.width_nm, processing};
}

ScwdStrategy empirical_scwd_strategy(int elements, int clusters, const SystemParameters& system,
                                     ReceiverKind receiver)
{
    check_elements(elements);
    const ClusterPlan cp = cluster_plan(elements, clusters);
    const WavelengthPlan plan = even_wavelength_plan(cp.sizes.front(), system.band_min_nm, system.band_max_nm);
    ScwdStrategy s;
    s.elements = elements;
    s.cluster_xy = layout_positions(clusters, system.room);
    s.led_nm = plan.centers_nm;
    s.filter_nm = plan.centers_nm;
    s.filter_width_nm = plan.width_nm;
    s.receiver = receiver;
    return s;
}

SceneConfig empirical_sd(int elements, const SystemParameters& system, ReceiverKind receiver)
{
    return build_scene(empirical_sd_strategy(elements, system.room, receiver), system);
}

SceneConfig empirical_wd(int elements, const SystemParameters& system, bool processing)
{
    return build_scene(empirical_wd_strategy(elements, system, processing), system);
}

SceneConfig empirical_scwd(int elements, int clusters, const SystemParameters& system, ReceiverKind receiver)
{
    return build_scene(empirical_scwd_strategy(elements, clusters, system, receiver), system);
}

ClusterSelection scwd_best_over_L(int elements, const std::function<double(int)>& rate_for_clusters)
{
    check_elements(elements);
    ClusterSelection best{1, 0.0, {}};
    for (int l = 1; l <= elements; ++l) {
        const double rate = rate_for_clusters(l);
        best.rates.push_back(rate);
        if (l == 1 || rate > best.rate) {
            best.clusters = l;
            best.rate = rate;
        }
    }
    return best;
}

} // namespace vlcmux
