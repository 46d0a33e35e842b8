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

#include <string>
#include <vector>

#include "vlcmux/evaluator.hpp"
#include "vlcmux/optimizer.hpp"
#include "vlcmux/strategies.hpp"

namespace vlcmux {

/// One strategy family as a bounded black-box maximization problem. Variables
/// are in configuration units (m, degrees, nm).
struct StrategyProblem {
    std::vector<std::string> names;
    Bounds bounds;
    std::function<StrategyConfig(const Eigen::VectorXd&)> decode;
    std::function<Eigen::VectorXd(const StrategyConfig&)> encode;
    Objective objective; // average rate in bit/s under the fixed sample set

    int dims() const { return static_cast<int>(names.size()); }
};

/// Layout: x_1..x_I, y_1..y_I, phi_half, m_fov[, theta_pd (pyramid only)].
StrategyProblem problem_sd(int elements, ReceiverKind receiver, const SystemParameters& system, const McConfig& mc);

/// Layout: led_1..led_I, filter_1..filter_I, filter_width.
StrategyProblem problem_wd(int elements, bool processing, const SystemParameters& system, const McConfig& mc);

/// Layout: x_1..x_L, y_1..y_L, led_1..led_M, filter_1..filter_M, phi_half,
/// m_fov, filter_width[, theta_pd (pyramid only)] with M = ceil(I / L).
StrategyProblem problem_scwd(int elements, int clusters, ReceiverKind receiver, const SystemParameters& system,
                             const McConfig& mc);

} // namespace vlcmux
