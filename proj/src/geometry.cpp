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

#include "vlcmux/geometry.hpp"

#include <cmath>

#include "vlcmux/units.hpp"

namespace vlcmux {

Pose Pose::facing(const Vec3& position, const Vec3& orientation)
{
    if (std::abs(orientation.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("Pose: orientation must be a unit vector");
    return Pose{position, orientation};
}

void RoomConfig::validate() const
{
    if (!(width > 0.0 && length > 0.0 && height > 0.0 && tx_height > 0.0 && rx_height > 0.0))
        throw std::invalid_argument("room dimensions must be positive");
    if (!(rx_height < tx_height && tx_height <= height))
        throw std::invalid_argument("room heights must satisfy 0 < z_rx < z_tx <= H");
}

OrientationModel OrientationModel::upward()
{
    return OrientationModel{};
}

OrientationModel OrientationModel::random_laplace()
{
    const double root2 = std::sqrt(2.0);
    OrientationModel m;
    m.kind = Kind::RandomLaplace;
    m.yaw = {0.0, from_deg(3.67) / root2};
    m.pitch = {from_deg(40.78), from_deg(2.39) / root2};
    m.roll = {from_deg(-0.84), from_deg(2.21) / root2};
    return m;
}

void OrientationModel::validate() const
{
    if (kind == Kind::RandomLaplace && !(yaw.scale > 0.0 && pitch.scale > 0.0 && roll.scale > 0.0))
        throw std::invalid_argument("Laplace orientation scales must be positive");
}

std::vector<Vec3> ReceiverGeometry::orientations() const
{
    return kind == ReceiverKind::Pyramid ? pr_orientations(count, elevation) : hr_orientations(count);
}

Mat3 rotation_matrix(double yaw, double pitch, double roll)
{
    const double cz = std::cos(yaw), sz = std::sin(yaw);
    const double cx = std::cos(pitch), sx = std::sin(pitch);
    const double cy = std::cos(roll), sy = std::sin(roll);
    Mat3 rz, rx, ry;
    rz << cz, -sz, 0.0, sz, cz, 0.0, 0.0, 0.0, 1.0;
    rx << 1.0, 0.0, 0.0, 0.0, cx, -sx, 0.0, sx, cx;
    ry << cy, 0.0, sy, 0.0, 1.0, 0.0, -sy, 0.0, cy;
    return rz * rx * ry;
}

Vec3 orient_pd(const Vec3& body_orientation, const UeState& ue)
{
    return rotation_matrix(ue.yaw, ue.pitch, ue.roll) * body_orientation;
}

namespace {

Vec3 spherical(double azimuth, double elevation)
{
    return {std::cos(azimuth) * std::sin(elevation), std::sin(azimuth) * std::sin(elevation), std::cos(elevation)};
}

} // namespace

std::vector<Vec3> pr_orientations(int count, double elevation)
{
    if (count < 1)
        throw std::invalid_argument("pr_orientations: count must be >= 1");
    if (!(elevation >= 0.0 && elevation <= pi / 2))
        throw std::invalid_argument("pr_orientations: elevation must lie in [0, pi/2]");
    std::vector<Vec3> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n)
        out.push_back(spherical(2.0 * pi * n / count, elevation));
    return out;
}

std::vector<Vec3> hr_orientations(int count)
{
    if (count < 1)
        throw std::invalid_argument("hr_orientations: count must be >= 1");
    std::vector<Vec3> out;
    out.reserve(count);
    double azimuth = 0.0;
    for (int n = 0; n < count; ++n) {
        const double s = 1.0 - 2.0 * n / (2.0 * count - 1.0);
        if (n > 0)
            azimuth = std::fmod(azimuth + 3.6 / std::sqrt(2.0 * count * (1.0 - s * s)), 2.0 * pi);
        out.push_back(spherical(azimuth, std::acos(s)));
    }
    return out;
}

double laplace_quantile(double u, double mean, double scale)
{
    const double v = u - 0.5;
    return mean - scale * std::copysign(1.0, v) * std::log1p(-2.0 * std::abs(v));
}

UeState sample_ue(Rng& rng, const RoomConfig& room, const OrientationModel& model)
{
    UeState ue;
    ue.x = room.width * rng.uniform();
    ue.y = room.length * rng.uniform();
    ue.azimuth = 2.0 * pi * (1.0 - rng.uniform()); // (0, 2pi]
    const double facing = ue.azimuth - pi / 2;
    if (model.kind == OrientationModel::Kind::Upward) {
        ue.yaw = facing;
        return ue;
    }
    ue.yaw = laplace_quantile(rng.uniform(), facing + model.yaw.mean, model.yaw.scale);
    ue.pitch = laplace_quantile(rng.uniform(), model.pitch.mean, model.pitch.scale);
    ue.roll = laplace_quantile(rng.uniform(), model.roll.mean, model.roll.scale);
    return ue;
}

LinkGeometry link_geometry(const Pose& led, const Pose& pd)
{
    const Vec3 d = pd.position - led.position;
    const double distance = d.norm();
    if (!(distance > 0.0))
        throw std::invalid_argument("link_geometry: LED and PD positions coincide");
    LinkGeometry g;
    g.distance = distance;
    g.cos_radiant = led.orientation.dot(d) / distance;
    g.cos_incident = -pd.orientation.dot(d) / distance;
    g.visible = g.cos_radiant > 0.0 && g.cos_incident > 0.0;
    return g;
}

} // namespace vlcmux
