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

#include "vlcmux/problems.hpp"

#include <stdexcept>

namespace vlcmux {

namespace {

// Open intervals become closed ones inset by this fraction of the range.
constexpr double inset = 1e-3;

constexpr double max_half_power_deg = 60.0;
constexpr double max_fov_order = 10.0;
constexpr double max_filter_width_nm = 300.0;

class BoundsBuilder {
public:
    void add(std::string name, double lo, double hi, double plo, double phi)
    {
        names.push_back(std::move(name));
        lower.push_back(lo);
        upper.push_back(hi);
        plower.push_back(plo);
        pupper.push_back(phi);
    }

    // (lo, hi) open at both ends, plausible range = full range
    void open(std::string name, double lo, double hi)
    {
        const double e = inset * (hi - lo);
        add(std::move(name), lo + e, hi - e, lo + e, hi - e);
    }

    Bounds bounds() const
    {
        auto vec = [](const std::vector<double>& v) {
            return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
        };
        Bounds b{vec(lower), vec(upper), vec(plower), vec(pupper)};
        b.validate();
        return b;
    }

    std::vector<std::string> names;

private:
    std::vector<double> lower, upper, plower, pupper;
};

void add_positions(BoundsBuilder& b, int n, const RoomConfig& room)
{
    for (int i = 0; i < n; ++i)
        b.open("x" + std::to_string(i + 1), 0.0, room.width);
    for (int i = 0; i < n; ++i)
        b.open("y" + std::to_string(i + 1), 0.0, room.length);
}

void add_wavelengths(BoundsBuilder& b, const char* prefix, int n, const SystemParameters& sys)
{
    for (int i = 0; i < n; ++i)
        b.add(prefix + std::to_string(i + 1), sys.band_min_nm, sys.band_max_nm, sys.band_min_nm, sys.band_max_nm);
}

void add_half_power(BoundsBuilder& b)
{
    // (0, 60]
    const double lo = inset * max_half_power_deg;
    b.add("half_power_deg", lo, max_half_power_deg, 10.0, max_half_power_deg);
}

void add_fov(BoundsBuilder& b) { b.add("fov_order", 1.0, max_fov_order, 1.0, 4.0); }

void add_filter_width(BoundsBuilder& b)
{
    // (0, 300]
    const double lo = inset * max_filter_width_nm;
    b.add("filter_width_nm", lo, max_filter_width_nm, 20.0, max_filter_width_nm);
}

void add_theta(BoundsBuilder& b) { b.add("theta_pd_deg", 0.0, 90.0, 10.0, 70.0); }

Objective make_objective(std::function<StrategyConfig(const Eigen::VectorXd&)> decode, SystemParameters sys,
                         McConfig mc)
{
    mc.keep_samples = false;
    return [decode = std::move(decode), sys = std::move(sys), mc](const Eigen::VectorXd& x) {
        return average_rate(build_scene(decode(x), sys), mc).mean;
    };
}

std::vector<double> slice(const Eigen::VectorXd& x, int offset, int n)
{
    return std::vector<double>(x.data() + offset, x.data() + offset + n);
}

std::vector<Vec2> slice_xy(const Eigen::VectorXd& x, int offset, int n)
{
    std::vector<Vec2> xy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xy[static_cast<std::size_t>(i)] = Vec2(x(offset + i), x(offset + n + i));
    return xy;
}

void put_xy(Eigen::VectorXd& x, int offset, const std::vector<Vec2>& xy)
{
    const int n = static_cast<int>(xy.size());
    for (int i = 0; i < n; ++i) {
        x(offset + i) = xy[static_cast<std::size_t>(i)].x();
        x(offset + n + i) = xy[static_cast<std::size_t>(i)].y();
    }
}

void put(Eigen::VectorXd& x, int offset, const std::vector<double>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        x(offset + static_cast<int>(i)) = v[i];
}

template <class T>
const T& expect(const StrategyConfig& s)
{
    const T* p = std::get_if<T>(&s);
    if (p == nullptr)
        throw std::invalid_argument("encode: strategy family does not match the problem");
    return *p;
}

} // namespace

StrategyProblem problem_sd(int elements, ReceiverKind receiver, const SystemParameters& system, const McConfig& mc)
{
    if (elements < 1)
        throw std::invalid_argument("problem_sd: need at least one element");
    system.validate();
    const bool pyramid = receiver == ReceiverKind::Pyramid;
    const int n = elements;

    BoundsBuilder b;
    add_positions(b, n, system.room);
    add_half_power(b);
    add_fov(b);
    if (pyramid)
        add_theta(b);

    StrategyProblem p;
    p.names = b.names;
    p.bounds = b.bounds();
    p.decode = [n, receiver, pyramid](const Eigen::VectorXd& x) -> StrategyConfig {
        SdStrategy s;
        s.led_xy = slice_xy(x, 0, n);
        s.half_power_deg = x(2 * n);
        s.fov_order = x(2 * n + 1);
        s.receiver = receiver;
        if (pyramid)
            s.theta_pd_deg = x(2 * n + 2);
        return s;
    };
    const int d = p.dims();
    p.encode = [n, d, pyramid](const StrategyConfig& cfg) {
        const auto& s = expect<SdStrategy>(cfg);
        if (static_cast<int>(s.led_xy.size()) != n)
            throw std::invalid_argument("encode: element count does not match the problem");
        Eigen::VectorXd x(d);
        put_xy(x, 0, s.led_xy);
        x(2 * n) = s.half_power_deg;
        x(2 * n + 1) = s.fov_order;
        if (pyramid)
            x(2 * n + 2) = s.theta_pd_deg;
        return x;
    };
    p.objective = make_objective(p.decode, system, mc);
    return p;
}

StrategyProblem problem_wd(int elements, bool processing, const SystemParameters& system, const McConfig& mc)
{
    if (elements < 1)
        throw std::invalid_argument("problem_wd: need at least one element");
    system.validate();
    const int n = elements;

    BoundsBuilder b;
    add_wavelengths(b, "led_nm", n, system);
    add_wavelengths(b, "filter_nm", n, system);
    add_filter_width(b);

    StrategyProblem p;
    p.names = b.names;
    p.bounds = b.bounds();
    p.decode = [n, processing](const Eigen::VectorXd& x) -> StrategyConfig {
        WdStrategy s;
        s.led_nm = slice(x, 0, n);
        s.filter_nm = slice(x, n, n);
        s.filter_width_nm = x(2 * n);
        s.processing = processing;
        return s;
    };
    const int d = p.dims();
    p.encode = [n, d](const StrategyConfig& cfg) {
        const auto& s = expect<WdStrategy>(cfg);
        if (static_cast<int>(s.led_nm.size()) != n || static_cast<int>(s.filter_nm.size()) != n)
            throw std::invalid_argument("encode: element count does not match the problem");
        Eigen::VectorXd x(d);
        put(x, 0, s.led_nm);
        put(x, n, s.filter_nm);
        x(2 * n) = s.filter_width_nm;
        return x;
    };
    p.objective = make_objective(p.decode, system, mc);
    return p;
}

StrategyProblem problem_scwd(int elements, int clusters, ReceiverKind receiver, const SystemParameters& system,
                             const McConfig& mc)
{
    if (elements < 1 || clusters < 1 || clusters > elements)
        throw std::invalid_argument("problem_scwd: need 1 <= clusters <= elements");
    system.validate();
    const bool pyramid = receiver == ReceiverKind::Pyramid;
    const int n = elements;
    const int l = clusters;
    const int m = (n + l - 1) / l;

    BoundsBuilder b;
    add_positions(b, l, system.room);
    add_wavelengths(b, "led_nm", m, system);
    add_wavelengths(b, "filter_nm", m, system);
    add_half_power(b);
    add_fov(b);
    add_filter_width(b);
    if (pyramid)
        add_theta(b);

    const int tail = 2 * l + 2 * m;
    StrategyProblem p;
    p.names = b.names;
    p.bounds = b.bounds();
    p.decode = [n, l, m, tail, receiver, pyramid](const Eigen::VectorXd& x) -> StrategyConfig {
        ScwdStrategy s;
        s.elements = n;
        s.cluster_xy = slice_xy(x, 0, l);
        s.led_nm = slice(x, 2 * l, m);
        s.filter_nm = slice(x, 2 * l + m, m);
        s.half_power_deg = x(tail);
        s.fov_order = x(tail + 1);
        s.filter_width_nm = x(tail + 2);
        s.receiver = receiver;
        if (pyramid)
            s.theta_pd_deg = x(tail + 3);
        return s;
    };
    const int d = p.dims();
    p.encode = [n, l, m, tail, d, pyramid](const StrategyConfig& cfg) {
        const auto& s = expect<ScwdStrategy>(cfg);
        if (s.elements != n || s.clusters() != l || static_cast<int>(s.led_nm.size()) != m
            || static_cast<int>(s.filter_nm.size()) != m)
            throw std::invalid_argument("encode: strategy dimensions do not match the problem");
        Eigen::VectorXd x(d);
        put_xy(x, 0, s.cluster_xy);
        put(x, 2 * l, s.led_nm);
        put(x, 2 * l + m, s.filter_nm);
        x(tail) = s.half_power_deg;
        x(tail + 1) = s.fov_order;
        x(tail + 2) = s.filter_width_nm;
        if (pyramid)
            x(tail + 3) = s.theta_pd_deg;
        return x;
    };
    p.objective = make_objective(p.decode, system, mc);
    return p;
}

} // namespace vlcmux
