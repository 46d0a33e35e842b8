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
#include "vlcmux/units.hpp"

#include <cmath>

using namespace vlcmux;
using Catch::Approx;

namespace {

SceneConfig nadir_scene(double power = 5.0)
{
    SceneConfig s;
    s.leds.push_back({Vec2(2.5, 2.5), 550e-9, power});
    PdElement pd;
    pd.filter.center = 550e-9;
    pd.filter.width = 300e-9;
    s.pds.push_back(pd);
    s.half_power_angle = from_deg(60.0);
    s.fov_order = 1.0;
    return s;
}

UeState below_centre()
{
    UeState ue;
    ue.x = 2.5;
    ue.y = 2.5;
    return ue;
}

double pole_magnitude(double f, double corner) { return 1.0 / std::sqrt(1.0 + (f / corner) * (f / corner)); }

} // namespace

TEST_CASE("Electro-optic map")
{
    const auto m = eo_map(5.0, 3.2);
    CHECK(m.scale == Approx(1.5625).epsilon(1e-15));
    CHECK(m.bias == 5.0);
    CHECK(m.scale * -3.2 + m.bias == Approx(0.0).margin(1e-15));
    CHECK(m.scale * 3.2 + m.bias == Approx(10.0).epsilon(1e-15));
    CHECK(eo_map(5.0, 1e12).scale < 1e-11);
    CHECK_THROWS_AS(eo_map(0.0, 3.2), std::invalid_argument);
    CHECK_THROWS_AS(eo_map(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("Pulse response - flat band, midpoint and edge")
{
    const double ts = 10e-9;
    for (double a : {0.1, 0.2, 0.5, 1.0}) {
        CHECK(rrc_gain(0.0, a, ts) == 1.0);
        CHECK(rrc_gain(1.0 / (2 * ts), a, ts) == Approx(std::sqrt(0.5)).epsilon(1e-12));
        CHECK(rrc_gain((1 + a) / (2 * ts), a, ts) == Approx(0.0).margin(1e-12));
        CHECK(rrc_gain(2.0 / ts, a, ts) == 0.0);
        CHECK(rrc_gain(-0.3 / ts, a, ts) == rrc_gain(0.3 / ts, a, ts));
    }
    CHECK(rrc_gain((1 - 0.2) / (2 * ts) * 0.99, 0.2, ts) == 1.0);
}

TEST_CASE("Front end - single pole")
{
    CHECK(front_end_gain(0.0, 35e6) == cdouble(1.0, 0.0));
    CHECK(std::abs(front_end_gain(35e6, 35e6)) == Approx(std::sqrt(0.5)).margin(1e-9));
    CHECK(std::abs(front_end_gain(106e6, 106e6)) == Approx(0.70711).margin(5e-6));
    CHECK(front_end_gain(-12e6, 35e6) == std::conj(front_end_gain(12e6, 35e6)));
}

TEST_CASE("Lambertian order")
{
    CHECK(lambertian_order(from_deg(60.0)) == Approx(1.0).epsilon(1e-14));
    CHECK(lambertian_order(from_deg(45.0)) == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("LoS gain - nadir value, visibility and inverse square")
{
    const LinkGeometry nadir{2.25, 1.0, 1.0, true};
    CHECK(los_baseband_gain(nadir, 1.0, 1.0, 1e-4, 1.0) == Approx(6.2876e-6).epsilon(1e-4));
    CHECK(los_baseband_gain(nadir, 1.0, 1.0, 1e-4, 1.0) == Approx(2e-4 / (2 * pi * 2.25 * 2.25)).epsilon(1e-14));

    const LinkGeometry hidden{2.25, 1.0, -1.0, false};
    CHECK(los_baseband_gain(hidden, 1.0, 1.0, 1e-4, 1.0) == 0.0);

    const LinkGeometry far{4.5, 1.0, 1.0, true};
    CHECK(los_baseband_gain(far, 1.3, 2.1, 1e-4, 0.4)
          == Approx(0.25 * los_baseband_gain(nadir, 1.3, 2.1, 1e-4, 0.4)).epsilon(1e-14));

    const LinkGeometry tilted{3.0, 0.8, 0.6, true};
    const double m = 1.7, mf = 2.3;
    CHECK(los_baseband_gain(tilted, m, mf, 1e-4, 0.3)
          == Approx((m + 1) * 1e-4 / (2 * pi * 9.0) * std::pow(0.8, m) * std::pow(0.6, mf) * 0.3).epsilon(1e-13));
}

TEST_CASE("Channel - nadir link against a factor-by-factor evaluation")
{
    const SceneConfig scene = nadir_scene();
    const ChannelSnapshot snap = ChannelModel(scene).evaluate(below_centre());
    const auto& h = snap.tensor;
    REQUIRE(h.subcarriers() == 256);
    REQUIRE(h.receivers() == 1);
    REQUIRE(h.transmitters() == 1);

    const double spectral = spectral_gain(LedSpectrum::centered_at(550e-9), scene.pds[0].filter, ResponsivityModel{}, 0.0);
    const double g = 2e-4 / (2 * pi * 2.25 * 2.25) * spectral;
    const double a = 5.0 / 3.2;

    CHECK(h(0, 0, 0).real() == Approx(5.0 * g).epsilon(1e-12));
    CHECK(h(0, 0, 0).imag() == 0.0);
    CHECK(snap.photocurrent[0] == Approx(5.0 * g).epsilon(1e-12));

    const double ts = 10e-9;
    for (int k = 1; k <= 100; ++k) {
        const double f = k / (256 * ts);
        const double want = a * g * pole_magnitude(f, 35e6) * pole_magnitude(f, 106e6);
        REQUIRE(std::abs(h(k, 0, 0)) == Approx(want).epsilon(1e-12));
    }
    // first subcarrier sits far below both corners
    CHECK(std::abs(h(1, 0, 0)) == Approx(a * g).epsilon(0.01));

    // the delay shows up as a linear phase
    const double tau = 2.25 / 3e8;
    const cdouble expect = std::polar(1.0, -2 * pi * (1 / (256 * ts)) * tau) * front_end_gain(1 / (256 * ts), 35e6)
                         * front_end_gain(1 / (256 * ts), 106e6) * (a * g);
    CHECK(testing::relative_gap(h(1, 0, 0), expect) < 1e-12);
}

TEST_CASE("Channel - aliased term near the band edge")
{
    const SceneConfig scene = nadir_scene();
    const auto h = subcarrier_channel(scene, below_centre());
    const double ts = 10e-9, alpha = 0.2;
    const double spectral = spectral_gain(LedSpectrum::centered_at(550e-9), scene.pds[0].filter, ResponsivityModel{}, 0.0);
    const double ag = 5.0 / 3.2 * 2e-4 / (2 * pi * 2.25 * 2.25) * spectral;
    const double tau = 2.25 / 3e8;
    auto response = [&](double f) {
        const double p = rrc_gain(f, alpha, ts);
        return ag * p * p * front_end_gain(f, 35e6) * front_end_gain(f, 106e6) * std::polar(1.0, -2 * pi * f * tau);
    };
    for (int k = 100; k <= 155; ++k) {
        const double f = k / (256 * ts);
        REQUIRE(testing::relative_gap(h(k, 0, 0), response(f) + response(f - 1 / ts)) < 1e-12);
    }
}

TEST_CASE("Channel - back-facing detectors see nothing")
{
    SceneConfig scene = nadir_scene();
    scene.pds[0].body_orientation = Vec3(0, 0, -1);
    const auto snap = ChannelModel(scene).evaluate(below_centre());
    for (int k = 0; k < 256; ++k)
        REQUIRE(snap.tensor(k, 0, 0) == cdouble(0.0));
    CHECK(snap.photocurrent[0] == 0.0);
}

TEST_CASE("Channel - photocurrent adds over co-located LEDs")
{
    SceneConfig one = nadir_scene(5.0);
    SceneConfig two = nadir_scene(2.5);
    two.leds.push_back(two.leds[0]);
    two.pds.push_back(two.pds[0]);
    const auto i1 = dc_photocurrent(one, below_centre());
    const auto i2 = dc_photocurrent(two, below_centre());
    CHECK(i2[0] == Approx(i1[0]).epsilon(1e-14));
    CHECK(i2[1] == Approx(i1[0]).epsilon(1e-14));
}

TEST_CASE("Channel - conjugate symmetry and determinism on random scenes")
{
    Rng rng(77);
    for (int s = 0; s < 100; ++s) {
        const SceneConfig scene = testing::random_scene(rng);
        const UeState ue = testing::random_ue(rng, scene.system.room);
        const ChannelModel model(scene);
        const auto a = model.evaluate(ue);
        const auto b = ChannelModel(scene).evaluate(ue);
        const auto& h = a.tensor;
        for (int k = 0; k < h.subcarriers(); ++k)
            for (int r = 0; r < h.receivers(); ++r)
                for (int t = 0; t < h.transmitters(); ++t) {
                    REQUIRE(std::isfinite(h(k, r, t).real()));
                    REQUIRE(h(k, r, t) == b.tensor(k, r, t));
                    if (k >= 1 && k < h.subcarriers() / 2)
                        REQUIRE(testing::relative_gap(h(h.subcarriers() - k, r, t), std::conj(h(k, r, t))) < 1e-10);
                }
        REQUIRE(a.photocurrent == b.photocurrent);
    }
}

TEST_CASE("Channel - magnitude falls with frequency in the flat pulse band")
{
    const SceneConfig scene = nadir_scene();
    UeState ue = below_centre();
    ue.x = 3.7;
    const auto h = subcarrier_channel(scene, ue);
    for (int k = 2; k <= 102; ++k)
        REQUIRE(std::abs(h(k, 0, 0)) <= std::abs(h(k - 1, 0, 0)));
}

TEST_CASE("Channel - scaling the optical power scales the data subcarriers")
{
    Rng rng(8);
    for (int s = 0; s < 10; ++s) {
        SceneConfig scene = testing::random_scene(rng);
        const UeState ue = testing::random_ue(rng, scene.system.room);
        const auto base = subcarrier_channel(scene, ue);
        for (auto& led : scene.leds)
            led.mean_power *= 4.0;
        const auto scaled = subcarrier_channel(scene, ue);
        for (int k = 1; k < base.subcarriers(); ++k)
            for (int r = 0; r < base.receivers(); ++r)
                for (int t = 0; t < base.transmitters(); ++t)
                    REQUIRE(testing::relative_gap(scaled(k, r, t), 4.0 * base(k, r, t)) < 1e-14);
    }
}

TEST_CASE("Channel - invalid scenes are rejected")
{
    SceneConfig empty;
    CHECK_THROWS(ChannelModel(empty));

    SceneConfig flat = nadir_scene();
    flat.system.room.rx_height = flat.system.room.tx_height; // detector in the LED plane
    CHECK_THROWS(ChannelModel(flat));

    SceneConfig outside = nadir_scene();
    outside.leds[0].xy = Vec2(7.0, 1.0);
    CHECK_THROWS(ChannelModel(outside));
}

TEST_CASE("Channel tensor - matrix view")
{
    ChannelTensor t(4, 2, 3);
    t(1, 1, 2) = cdouble(1.5, -2.0);
    const auto m = t.matrix(1);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == cdouble(1.5, -2.0));
}
