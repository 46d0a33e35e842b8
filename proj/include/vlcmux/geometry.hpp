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

#include <stdexcept>
#include <vector>

#include "vlcmux/random.hpp"

namespace vlcmux {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Position (m) and unit pointing direction of an LED or photodiode.
struct Pose {
    Vec3 position;
    Vec3 orientation;

    /// Throws std::invalid_argument unless |orientation| is 1 within 1e-12.
    static Pose facing(const Vec3& position, const Vec3& orientation);
};

struct RoomConfig {
    double width = 5.0;
    double length = 5.0;
    double height = 3.0;
    double tx_height = 3.0;
    double rx_height = 0.75;

    void validate() const;
};

/// Sampled user equipment: horizontal position, azimuth and yaw/pitch/roll.
struct UeState {
    double x = 0.0;
    double y = 0.0;
    double azimuth = 0.0;
    double yaw = 0.0;   // rotation about z
    double pitch = 0.0; // rotation about x
    double roll = 0.0;  // rotation about y
};

/// Device orientation statistics. The yaw mean is always relative to the
/// facing direction, i.e. azimuth - pi/2 plus yaw_offset.
struct OrientationModel {
    enum class Kind { Upward, RandomLaplace };

    struct Laplace {
        double mean = 0.0;
        double scale = 1.0; // b = stddev / sqrt(2)
    };

    Kind kind = Kind::Upward;
    Laplace yaw;   // mean is an offset added to azimuth - pi/2
    Laplace pitch;
    Laplace roll;

    static OrientationModel upward();
    /// Hand-held device statistics for seated users (Laplace, radians).
    static OrientationModel random_laplace();

    void validate() const;
};

enum class ReceiverKind { Pyramid, Hemispheric };

struct ReceiverGeometry {
    ReceiverKind kind = ReceiverKind::Pyramid;
    int count = 1;
    double elevation = 0.0; // pyramid only

    /// Body-frame (upward-facing device) detector orientations.
    std::vector<Vec3> orientations() const;
};

struct LinkGeometry {
    double distance = 0.0;
    double cos_radiant = 0.0;
    double cos_incident = 0.0;
    bool visible = false;
};

/// R_z(yaw) * R_x(pitch) * R_y(roll).
Mat3 rotation_matrix(double yaw, double pitch, double roll);

/// Rotates a body-frame detector direction into the room frame.
Vec3 orient_pd(const Vec3& body_orientation, const UeState& ue);

/// Pyramid receiver: equal azimuth spacing, common elevation.
std::vector<Vec3> pr_orientations(int count, double elevation);

/// Hemispheric receiver: spiral point set on the upper hemisphere.
std::vector<Vec3> hr_orientations(int count);

UeState sample_ue(Rng& rng, const RoomConfig& room, const OrientationModel& model);

/// Inverse-CDF Laplace draw from one uniform on (0, 1).
double laplace_quantile(double u, double mean, double scale);

/// Distance, emission/incidence cosines and mutual visibility. Throws on
/// coincident positions.
LinkGeometry link_geometry(const Pose& led, const Pose& pd);

} // namespace vlcmux
