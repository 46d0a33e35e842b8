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

#include <optional>
#include <stdexcept>
#include <string>

#include "vlcmux/evaluator.hpp"
#include "vlcmux/optimizer.hpp"
#include "vlcmux/strategies.hpp"

namespace vlcmux {

/// Parse or validation failure; `key` is the dotted path of the offending
/// entry (empty for syntax errors).
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

enum class Family { Sd, Wd, Scwd };

const char* family_name(Family f);

// Every field is kept in the unit written in the file so that
// serialize(parse(text)) reproduces the same numbers bit for bit.
struct Scenario {
    struct Room {
        double width_m = 5.0;
        double length_m = 5.0;
        double height_m = 3.0;
        double tx_height_m = 3.0;
        double rx_height_m = 0.75;
    } room;

    struct Frontend {
        double led_bandwidth_mhz = 35.0;
        double pd_bandwidth_mhz = 106.0;
        double modulation_bandwidth_mhz = 50.0;
        double rrc_rolloff = 0.2;
        int fft_size = 256;
        int cyclic_prefix = 30;
    } frontend;

    struct Noise {
        double load_resistance_ohm = 50.0;
        double temperature_k = 300.0;
    } noise;

    struct Power {
        double total_optical_w = 80.0;
        double clip_level = 3.2;
    } power;

    struct Optics {
        double pd_area_cm2 = 1.0;
        double quantum_efficiency = 0.8;
        double effective_index = 2.0;
        double filter_transmittance = 1.0;
        double band_min_nm = 400.0;
        double band_max_nm = 700.0;
    } optics;

    struct Link {
        double gap_db = 6.06;
    } link;

    struct Strategy {
        Family variant = Family::Sd;
        int elements = 4;
        std::optional<int> clusters; // empty: best over L (SCWD only)
        bool processing = true;      // WD only
        std::optional<StrategyConfig> parameters; // empty: empirical layout
    } strategy;

    struct Receiver {
        ReceiverKind kind = ReceiverKind::Pyramid;
        double theta_pd_deg = 40.0;
    } receiver;

    bool random_orientation = false;

    struct MonteCarlo {
        int samples = 500;
        std::uint64_t seed = 1;
    } monte_carlo;

    struct Optimizer {
        int starts = 10;
        int samples = 200;
        int max_iterations = 200;
        double poll_threshold = 1e-6;
    } optimizer;

    SystemParameters system() const;
    McConfig mc(int threads = 1) const;
    OptimizerOptions optimizer_options() const;

    /// Strategy for a given cluster count (ignored unless SCWD). Explicit
    /// parameters win over the empirical layout.
    StrategyConfig strategy_config(int clusters = 0) const;

    void validate() const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& scenario);

/// Copies an explicit strategy into the scenario, including the receiver
/// elevation when the strategy carries one.
void set_parameters(Scenario& scenario, const StrategyConfig& strategy);

} // namespace vlcmux
