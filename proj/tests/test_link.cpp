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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "vlcmux/channel.hpp"
#include "vlcmux/evaluator.hpp"
#include "vlcmux/link.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>

using namespace vlcmux;
using Catch::Approx;

namespace {

struct ClipOracle {
    double attenuation;
    double noise_variance;
};

// E{x clip(x)} and Var(clip(x) - eta x) by direct sampling.
ClipOracle sample_clipping(double kappa, long n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    double sxy = 0, syy = 0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) {
        v = normal(gen);
        const double y = std::clamp(v, -kappa, kappa);
        sxy += v * y;
        syy += y * y;
    }
    const double eta = sxy / static_cast<double>(n);
    return {eta, syy / static_cast<double>(n) - eta * eta};
}

ChannelTensor tensor_from(const std::vector<Eigen::MatrixXcd>& per_k)
{
    const int K = 2 * (static_cast<int>(per_k.size()) + 1);
    const auto nr = static_cast<int>(per_k[0].rows()), nt = static_cast<int>(per_k[0].cols());
    ChannelTensor t(K, nr, nt);
    for (int k = 1; k <= static_cast<int>(per_k.size()); ++k)
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nt; ++c) {
                t(k, r, c) = per_k[k - 1](r, c);
                t(K - k, r, c) = std::conj(per_k[k - 1](r, c));
            }
    return t;
}

Eigen::MatrixXcd random_complex(std::mt19937_64& gen, int rows, int cols)
{
    std::normal_distribution<double> n;
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = cdouble(n(gen), n(gen));
    return m;
}

} // namespace

TEST_CASE("Clipping - closed form against sampling")
{
    for (double kappa : {1.0, 2.0, 3.2, 5.0}) {
        const auto c = clipping_stats(kappa);
        const auto o = sample_clipping(kappa, 2'000'000, 17);
        CHECK(c.attenuation == Approx(o.attenuation).margin(1e-3));
        CHECK(c.noise_variance == Approx(o.noise_variance).margin(1e-3));
        CHECK(c.top == kappa);
        CHECK(c.bottom == -kappa);
        CHECK(c.mean == 0.0);
        CHECK(c.attenuation > 0.0);
        CHECK(c.attenuation <= 1.0);
        CHECK(c.noise_variance >= 0.0);
    }
    CHECK(clipping_stats(3.2).attenuation == Approx(0.99863).margin(5e-6));
    CHECK(clipping_stats(40.0).attenuation == 1.0);
    CHECK(clipping_stats(40.0).noise_variance == Approx(0.0).margin(1e-15));
    CHECK_THROWS_AS(clipping_stats(0.0), std::invalid_argument);
}

TEST_CASE("Receiver noise - thermal floor, shot term and bandwidth scaling")
{
    const NoiseModel m{50.0, 300.0, 50e6};
    const double thermal = 4.0 * 1.38e-23 * 300.0 * 50e6 / 50.0;
    CHECK(receiver_noise(0.0, m) == Approx(thermal).epsilon(1e-12));
    CHECK(receiver_noise(0.0, m) == Approx(1.656e-14).epsilon(1e-3));
    CHECK(receiver_noise(0.0, m) == m.thermal_variance());
    CHECK(receiver_noise(1e-3, m) - receiver_noise(0.0, m) == Approx(1.6e-14).epsilon(1e-9));
    NoiseModel wide = m;
    wide.bandwidth = 100e6;
    CHECK(receiver_noise(2e-3, wide) == Approx(2 * receiver_noise(2e-3, m)).epsilon(1e-14));
}

TEST_CASE("SVD multiplexers - diagonal channel")
{
    std::vector<Eigen::MatrixXcd> hs(3, Eigen::MatrixXcd::Zero(3, 3));
    for (auto& h : hs)
        h.diagonal() << 0.2, 3.0, 1.1;
    const auto t = tensor_from(hs);
    const auto m = svd_multiplexers(t, 3);
    REQUIRE(m.singular_values.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(m.singular_values[k](0) == Approx(3.0).epsilon(1e-14));
        CHECK(m.singular_values[k](1) == Approx(1.1).epsilon(1e-14));
        CHECK(m.singular_values[k](2) == Approx(0.2).epsilon(1e-14));
        const Eigen::MatrixXcd d = m.detectors[k] * hs[k] * m.precoders[k];
        CHECK((d.cwiseAbs() - Eigen::Vector3d(3.0, 1.1, 0.2).asDiagonal().toDenseMatrix()).norm() < 1e-14);
    }
}

TEST_CASE("SVD multiplexers - random channels are diagonalized")
{
    std::mt19937_64 gen(4);
    std::vector<Eigen::MatrixXcd> hs;
    for (int k = 0; k < 20; ++k)
        hs.push_back(random_complex(gen, 4, 4));
    const auto m = svd_multiplexers(tensor_from(hs), 4);
    for (int k = 0; k < 20; ++k) {
        const auto& f = m.precoders[k];
        const auto& w = m.detectors[k];
        const Eigen::MatrixXcd sigma = m.singular_values[k].cast<cdouble>().asDiagonal();
        REQUIRE((w * hs[k] * f - sigma).norm() <= 1e-10 * hs[k].norm());
        REQUIRE((f.adjoint() * f - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-10);
        for (int i = 0; i < 4; ++i)
            REQUIRE(std::abs(w.row(i).norm() - 1.0) < 1e-10);
        for (int i = 1; i < 4; ++i)
            REQUIRE(m.singular_values[k](i) <= m.singular_values[k](i - 1));
        // independent decomposition of the same matrix
        Eigen::JacobiSVD<Eigen::MatrixXcd> ref(hs[k]);
        REQUIRE((ref.singularValues() - m.singular_values[k]).norm() < 1e-12 * hs[k].norm());
    }
}

TEST_CASE("SVD multiplexers - rank one and fewer streams")
{
    std::mt19937_64 gen(6);
    const Eigen::MatrixXcd u = random_complex(gen, 4, 1), v = random_complex(gen, 4, 1);
    const auto m = svd_multiplexers(tensor_from({u * v.adjoint()}), 4);
    for (int i = 1; i < 4; ++i)
        CHECK(m.singular_values[0](i) <= 1e-12 * m.singular_values[0](0));

    const auto two = svd_multiplexers(tensor_from({random_complex(gen, 5, 3)}), 2);
    CHECK(two.precoders[0].rows() == 3);
    CHECK(two.precoders[0].cols() == 2);
    CHECK(two.detectors[0].rows() == 2);
    CHECK(two.detectors[0].cols() == 5);
}

TEST_CASE("SVD multiplexers - non-finite entries are rejected")
{
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
    h(0, 1) = cdouble(std::nan(""), 0.0);
    CHECK_THROWS_AS(svd_multiplexers(tensor_from({h}), 2), std::invalid_argument);
}

TEST_CASE("SNR - scalar channel and zero channel")
{
    std::vector<Eigen::MatrixXcd> hs(2, Eigen::MatrixXcd::Zero(2, 2));
    hs[0].diagonal() << 2e-3, 1e-3;
    hs[1].diagonal() << 1e-3, 5e-4;
    const auto t = tensor_from(hs);
    const ClippingStats none{1e9, -1e9, 1.0, 0.0, 0.0};
    const std::vector<double> noise{1e-11, 4e-11};
    const double q = uniform_power_allocation(6);
    CHECK(q == 6.0 / 4.0);
    const auto g = snr_grid(t, identity_multiplexers(t), none, noise, q);
    CHECK(g.snr(0, 0) == Approx(4e-6 * q / 1e-11).epsilon(1e-14));
    CHECK(g.snr(1, 0) == Approx(1e-6 * q / 4e-11).epsilon(1e-14));
    CHECK(g.snr(1, 1) == Approx(2.5e-7 * q / 4e-11).epsilon(1e-14));

    const auto zero = tensor_from({Eigen::MatrixXcd::Zero(2, 2)});
    const auto gz = snr_grid(zero, identity_multiplexers(zero), clipping_stats(3.2), noise, q);
    CHECK(gz.snr.isZero(0.0));

    CHECK_THROWS_AS(snr_grid(t, identity_multiplexers(t), none, std::vector<double>{0.0, 0.0}, q),
                    std::invalid_argument);
}

TEST_CASE("SNR - crosstalk with identity processing, evaluated by hand")
{
    Eigen::MatrixXcd h(2, 2);
    h << cdouble(3e-3, 0.0), cdouble(0.0, 1e-3), cdouble(5e-4, 5e-4), cdouble(2e-3, 0.0);
    const auto t = tensor_from({h});
    const ClippingStats clip = clipping_stats(2.0);
    const std::vector<double> noise{2e-11, 3e-11};
    const double q = 1.25;
    const auto g = snr_grid(t, identity_multiplexers(t), clip, noise, q);

    const double e2 = clip.attenuation * clip.attenuation, c = clip.noise_variance;
    // stream 0: signal |h00|^2, interferer |h01|^2, clipping over the row
    const double s0 = e2 * 9e-6 * q;
    const double i0 = e2 * 1e-6 * q;
    const double c0 = c * (9e-6 + 1e-6);
    CHECK(g.snr(0, 0) == Approx(s0 / (c0 + i0 + 2e-11)).epsilon(1e-12));
    // stream 1: signal |h11|^2, interferer |h10|^2 = 5e-7
    const double s1 = e2 * 4e-6 * q;
    const double i1 = e2 * 5e-7 * q;
    const double c1 = c * (5e-7 + 4e-6);
    CHECK(g.snr(1, 0) == Approx(s1 / (c1 + i1 + 3e-11)).epsilon(1e-12));

    const auto terms = snr_terms(h, Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2), clip, noise,
                                 Eigen::Vector2d(q, q), 1);
    CHECK(terms.signal == Approx(s1).epsilon(1e-12));
    CHECK(terms.interference == Approx(i1).epsilon(1e-12));
    CHECK(terms.clipping == Approx(c1).epsilon(1e-12));
    CHECK(terms.receiver == Approx(3e-11).epsilon(1e-14));
}

TEST_CASE("Rate - closed form and edge cases")
{
    const double gap = std::pow(10.0, 0.606);
    SnrGrid g{Eigen::MatrixXd::Constant(1, 127, gap), Eigen::MatrixXd::Constant(1, 127, 256.0 / 254.0)};
    const double c = achievable_rate(g, gap, 10e-9, 256, 30);
    CHECK(c == Approx(127.0 / (10e-9 * 286.0)).epsilon(1e-12));
    CHECK(c / 1e6 == Approx(44.406).margin(5e-4));

    g.snr.setZero();
    CHECK(achievable_rate(g, gap, 10e-9, 256, 30) == 0.0);
    CHECK_THROWS_AS(achievable_rate(g, 0.5, 10e-9, 256, 30), std::invalid_argument);

    SystemParameters sys;
    CHECK(sys.gap_linear() == Approx(4.036).margin(5e-4));
}

TEST_CASE("Rate - invariant under stream permutation")
{
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    SnrGrid g{Eigen::MatrixXd(4, 127), Eigen::MatrixXd::Constant(4, 127, 1.0)};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 127; ++k)
            g.snr(i, k) = u(gen);
    SnrGrid p = g;
    p.snr.row(0) = g.snr.row(3);
    p.snr.row(3) = g.snr.row(0);
    p.snr.row(1).swap(p.snr.row(2));
    CHECK(achievable_rate(p, 4.0, 10e-9, 256, 30) == Approx(achievable_rate(g, 4.0, 10e-9, 256, 30)).epsilon(1e-14));
}

TEST_CASE("SNR - more power never hurts")
{
    Rng rng(21);
    for (int s = 0; s < 20; ++s) {
        SceneConfig scene = testing::random_scene(rng);
        scene.processing = Processing::Svd;
        const UeState ue = testing::random_ue(rng, scene.system.room);
        Eigen::MatrixXd prev;
        for (double scale : {1.0, 2.0, 4.0}) {
            SceneConfig scaled = scene;
            for (auto& led : scaled.leds)
                led.mean_power *= scale;
            const SnrGrid g = RateModel(scaled).snr(ue);
            if (prev.size() > 0)
                REQUIRE((g.snr.array() >= prev.array() * (1.0 - 1e-12)).all());
            prev = g.snr;
        }
    }
}

TEST_CASE("SNR - SVD multiplexers leave no inter-stream interference")
{
    Rng rng(21);
    for (int s = 0; s < 20; ++s) {
        SceneConfig scene = testing::random_scene(rng);
        scene.processing = Processing::Svd;
        const UeState ue = testing::random_ue(rng, scene.system.room);
        const auto snap = ChannelModel(scene).evaluate(ue);
        const auto m = svd_multiplexers(snap.tensor, scene.streams());
        const std::vector<double> noise(snap.photocurrent.size(), 1e-11);
        const auto clip = clipping_stats(3.2);
        for (int k = 1; k <= 127; k += 7) {
            const Eigen::VectorXd p = Eigen::VectorXd::Constant(scene.streams(), 1.0);
            for (int i = 0; i < scene.streams(); ++i) {
                const auto t = snr_terms(snap.tensor.matrix(k), m.precoders[k - 1], m.detectors[k - 1], clip, noise, p, i);
                if (t.signal > 0.0) {
                    const auto& sv = m.singular_values[k - 1];
                    INFO("scene " << s << ", k " << k << ", stream " << i << ": interference/signal "
                                  << t.interference / t.signal << ", sigma_i/sigma_max " << sv(i) / sv(0));
                    REQUIRE(t.interference <= 1e-18 * t.signal + 1e-300);
                }
            }
        }
    }
}
