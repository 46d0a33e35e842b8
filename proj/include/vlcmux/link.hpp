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

#include <span>
#include <vector>

#include "vlcmux/channel.hpp"

namespace vlcmux {

/// Bussgang model of symmetric clipping of a unit-variance Gaussian signal:
/// clip(x) = attenuation * x + noise, noise uncorrelated with x.
struct ClippingStats {
    double top;
    double bottom;
    double attenuation;
    double noise_variance;
    double mean;
};

ClippingStats clipping_stats(double clip_level);

struct NoiseModel {
    double load_resistance = 50.0; // ohm
    double temperature = 300.0;    // K
    double bandwidth = 50e6;       // signalling bandwidth 1/(2 T_s), Hz

    double thermal_variance() const;
};

/// Shot plus thermal noise variance (A^2) for a given average photocurrent.
double receiver_noise(double photocurrent, const NoiseModel& model);

/// Per-data-subcarrier precoders (N_t x I) and detectors (I x N_r), indexed
/// 0..K~-1 for subcarriers k = 1..K~.
struct MultiplexSet {
    std::vector<Eigen::MatrixXcd> precoders;
    std::vector<Eigen::MatrixXcd> detectors;
    std::vector<Eigen::VectorXd> singular_values; // empty for non-SVD sets
};

/// SVD per data subcarrier, keeping the `streams` strongest eigenchannels.
MultiplexSet svd_multiplexers(const ChannelTensor& h, int streams);

/// F = W = I, i.e. one stream per LED/PD pair with no MIMO processing.
MultiplexSet identity_multiplexers(const ChannelTensor& h);

/// gamma[i][k] for streams i = 0..I-1 and data subcarriers k = 1..K~ (stored
/// at column k-1).
struct SnrGrid {
    Eigen::MatrixXd snr;   // I x K~
    Eigen::MatrixXd power; // I x K~

    int streams() const { return static_cast<int>(snr.rows()); }
    int subcarriers() const { return static_cast<int>(snr.cols()); }
};

/// Power per stream per subcarrier that keeps the time-domain variance at one.
double uniform_power_allocation(int fft_size);

struct SnrTerms {
    double signal;
    double clipping;
    double interference;
    double receiver;
};

/// The four contributions to stream `i` on data subcarrier `k`.
SnrTerms snr_terms(const Eigen::MatrixXcd& hk, const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& w,
                   const ClippingStats& clip, std::span<const double> noise_variance,
                   const Eigen::VectorXd& power, int stream);

SnrGrid snr_grid(const ChannelTensor& h, const MultiplexSet& m, const ClippingStats& clip,
                 std::span<const double> noise_variance, double power);

/// Sum over streams and data subcarriers of log2(1 + gamma / gap), divided by
/// the OFDM frame duration T_s (K + N_cp).
double achievable_rate(const SnrGrid& grid, double gap_linear, double symbol_period, int fft_size,
                       int cyclic_prefix);

} // namespace vlcmux
