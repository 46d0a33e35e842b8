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

#include "vlcmux/link.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlcmux/units.hpp"

namespace vlcmux {

namespace {

double normal_pdf(double x)
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
}

// upper tail Q(x)
double normal_q(double x)
{
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

} // namespace

ClippingStats clipping_stats(double clip_level)
{
    if (!(clip_level > 0.0))
        throw std::invalid_argument("clipping_stats: clipping level must be positive");
    const double k = clip_level;
    const double q = normal_q(k);
    const double eta = 1.0 - 2.0 * q;
    const double second_moment = eta - 2.0 * k * normal_pdf(k) + 2.0 * k * k * q;
    return {k, -k, eta, std::max(0.0, second_moment - eta * eta), 0.0};
}

double NoiseModel::thermal_variance() const
{
    return 4.0 * constants::boltzmann * temperature * bandwidth / load_resistance;
}

double receiver_noise(double photocurrent, const NoiseModel& model)
{
    return 2.0 * constants::electron_charge * photocurrent * model.bandwidth + model.thermal_variance();
}

MultiplexSet svd_multiplexers(const ChannelTensor& h, int streams)
{
    if (streams < 1 || streams > std::min(h.receivers(), h.transmitters()))
        throw std::invalid_argument("svd_multiplexers: stream count must lie in [1, min(N_t, N_r)]");
    const int data = h.subcarriers() / 2 - 1;
    MultiplexSet m;
    m.precoders.reserve(data);
    m.detectors.reserve(data);
    m.singular_values.reserve(data);
    for (int k = 1; k <= data; ++k) {
        const Eigen::MatrixXcd hk = h.matrix(k);
        if (!hk.allFinite())
            throw std::invalid_argument("svd_multiplexers: channel has non-finite entries");
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(hk, Eigen::ComputeThinU | Eigen::ComputeThinV);
        m.precoders.push_back(svd.matrixV().leftCols(streams));
        m.detectors.push_back(svd.matrixU().leftCols(streams).adjoint());
        m.singular_values.push_back(svd.singularValues().head(streams));
    }
    return m;
}

MultiplexSet identity_multiplexers(const ChannelTensor& h)
{
    if (h.receivers() != h.transmitters())
        throw std::invalid_argument("identity_multiplexers: needs a square channel");
    const int n = h.receivers();
    const int data = h.subcarriers() / 2 - 1;
    MultiplexSet m;
    m.precoders.assign(data, Eigen::MatrixXcd::Identity(n, n));
    m.detectors.assign(data, Eigen::MatrixXcd::Identity(n, n));
    return m;
}

double uniform_power_allocation(int fft_size)
{
    return static_cast<double>(fft_size) / (fft_size - 2);
}

SnrTerms snr_terms(const Eigen::MatrixXcd& hk, const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& w,
                   const ClippingStats& clip, std::span<const double> noise_variance,
                   const Eigen::VectorXd& power, int i)
{
    const double eta2 = clip.attenuation * clip.attenuation;
    const Eigen::RowVectorXcd wh = w.row(i) * hk;  // W_i H, length N_t
    const Eigen::RowVectorXcd whf = wh * f;        // coupling into every stream
    SnrTerms t{};
    t.signal = eta2 * std::norm(whf(i)) * power(i);
    t.clipping = clip.noise_variance * wh.squaredNorm();
    for (int j = 0; j < whf.size(); ++j)
        if (j != i)
            t.interference += eta2 * std::norm(whf(j)) * power(j);
    for (int r = 0; r < w.cols(); ++r)
        t.receiver += std::norm(w(i, r)) * noise_variance[r];
    return t;
}

SnrGrid snr_grid(const ChannelTensor& h, const MultiplexSet& m, const ClippingStats& clip,
                 std::span<const double> noise_variance, double power)
{
    if (static_cast<int>(noise_variance.size()) != h.receivers())
        throw std::invalid_argument("snr_grid: one noise variance per PD is required");
    const int data = h.subcarriers() / 2 - 1;
    if (static_cast<int>(m.detectors.size()) != data || static_cast<int>(m.precoders.size()) != data)
        throw std::invalid_argument("snr_grid: multiplexers do not match the channel");
    double max_noise = 0.0;
    for (double v : noise_variance)
        max_noise = std::max(max_noise, v);
    if (!(clip.noise_variance > 0.0) && !(max_noise > 0.0))
        throw std::invalid_argument("snr_grid: SNR undefined without any noise");

    const int streams = static_cast<int>(m.detectors.front().rows());
    SnrGrid grid{Eigen::MatrixXd::Zero(streams, data), Eigen::MatrixXd::Constant(streams, data, power)};
    Eigen::VectorXd p = Eigen::VectorXd::Constant(streams, power);
    for (int k = 1; k <= data; ++k) {
        const Eigen::MatrixXcd hk = h.matrix(k);
        const auto& f = m.precoders[k - 1];
        const auto& w = m.detectors[k - 1];
        for (int i = 0; i < streams; ++i) {
            const SnrTerms t = snr_terms(hk, f, w, clip, noise_variance, p, i);
            const double denom = t.clipping + t.interference + t.receiver;
            grid.snr(i, k - 1) = denom > 0.0 ? t.signal / denom : 0.0;
        }
    }
    return grid;
}

double achievable_rate(const SnrGrid& grid, double gap_linear, double symbol_period, int fft_size,
                       int cyclic_prefix)
{
    if (!(gap_linear >= 1.0))
        throw std::invalid_argument("achievable_rate: gap factor must be >= 1 (linear)");
    double bits = 0.0;
    for (int i = 0; i < grid.streams(); ++i)
        for (int k = 0; k < grid.subcarriers(); ++k)
            bits += std::log2(1.0 + grid.snr(i, k) / gap_linear);
    return bits / (symbol_period * (fft_size + cyclic_prefix));
}

} // namespace vlcmux
