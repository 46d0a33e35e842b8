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

#include "vlcmux/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlcmux/units.hpp"

namespace vlcmux {

using namespace constants;

LedSpectrum LedSpectrum::centered_at(double center)
{
    return LedSpectrum{center, delta_lambda_half(center)};
}

void FilterSpec::validate() const
{
    if (!(width > 0.0))
        throw std::invalid_argument("filter passband width must be positive");
    if (!(effective_index >= 1.0))
        throw std::invalid_argument("filter effective index must be >= 1");
    if (!(transmittance > 0.0 && transmittance <= 1.0))
        throw std::invalid_argument("filter transmittance must lie in (0, 1]");
}

double delta_lambda_half(double center)
{
    if (!(center > 0.0))
        throw std::invalid_argument("delta_lambda_half: wavelength must be positive");
    constexpr double junction_temperature = 300.0;
    const double coeff = center <= 560e-9 ? 5.5 : 2.5;
    return coeff * boltzmann * junction_temperature / (planck * speed_of_light) * center * center;
}

double led_psd(double lambda, const LedSpectrum& s)
{
    const double sqrt_pi = std::sqrt(pi);
    const double sqrt5 = std::sqrt(5.0);
    const double u = (lambda - s.center) / s.half_width;
    const double num = 2.0 / sqrt_pi * std::exp(-u * u) + 4.0 / sqrt_pi * std::exp(-5.0 * u * u);
    const double den = s.half_width * ((2.0 + sqrt5) / sqrt5 + std::erf(s.center / s.half_width)
                                       + 2.0 / sqrt5 * std::erf(sqrt5 * s.center / s.half_width));
    return num / den;
}

double responsivity(double lambda, const ResponsivityModel& model)
{
    return model.quantum_efficiency * electron_charge * lambda / (planck * speed_of_light);
}

Passband filter_passband(const FilterSpec& spec, double incidence)
{
    if (!(incidence >= 0.0 && incidence < pi / 2))
        throw std::invalid_argument("filter incidence angle must lie in [0, pi/2)");
    const double s = std::sin(incidence) / spec.effective_index;
    const double shift = std::sqrt(1.0 - s * s);
    return {(spec.center - spec.width / 2) * shift, (spec.center + spec.width / 2) * shift};
}

double filter_transmittance(double lambda, double incidence, const FilterSpec& spec)
{
    const Passband band = filter_passband(spec, incidence);
    return (lambda >= band.left && lambda <= band.right) ? spec.transmittance : 0.0;
}

SpectralGainTable::SpectralGainTable(const LedSpectrum& led, const ResponsivityModel& resp,
                                     const WavelengthRange& range, double step)
    : led_(led), resp_(resp), range_(range), step_(step)
{
    if (!(range.max > range.min && step > 0.0))
        throw std::invalid_argument("SpectralGainTable: bad wavelength grid");
    const auto intervals = static_cast<std::size_t>(std::ceil((range.max - range.min) / step - 1e-9));
    step_ = (range.max - range.min) / static_cast<double>(intervals);
    values_.resize(intervals + 1);
    cumulative_.resize(intervals + 1);
    for (std::size_t j = 0; j <= intervals; ++j)
        values_[j] = integrand(node(j));
    cumulative_[0] = 0.0;
    for (std::size_t j = 1; j <= intervals; ++j)
        cumulative_[j] = cumulative_[j - 1] + 0.5 * step_ * (values_[j - 1] + values_[j]);
}

double SpectralGainTable::integrand(double lambda) const
{
    return responsivity(lambda, resp_) * led_psd(lambda, led_);
}

double SpectralGainTable::integrate(double lo, double hi) const
{
    lo = std::max(lo, range_.min);
    hi = std::min(hi, range_.max);
    if (!(hi > lo))
        return 0.0;
    const std::size_t last = values_.size() - 1;
    // first node strictly above lo, last node strictly below hi
    auto a = static_cast<std::size_t>(std::floor((lo - range_.min) / step_)) + 1;
    while (a > 0 && node(a - 1) > lo)
        --a;
    while (a <= last && node(a) <= lo)
        ++a;
    auto b = static_cast<std::size_t>(std::ceil((hi - range_.min) / step_));
    b = std::min(b, last + 1);
    while (b > 0 && node(b - 1) >= hi)
        --b;
    // b is now one past the last node strictly below hi
    const double f_lo = integrand(lo);
    const double f_hi = integrand(hi);
    if (a >= b)
        return 0.5 * (hi - lo) * (f_lo + f_hi);
    const std::size_t end = b - 1;
    double sum = 0.5 * (node(a) - lo) * (f_lo + values_[a]);
    sum += cumulative_[end] - cumulative_[a];
    sum += 0.5 * (hi - node(end)) * (values_[end] + f_hi);
    return sum;
}

double SpectralGainTable::gain(const FilterSpec& filter, double incidence) const
{
    const Passband band = filter_passband(filter, incidence);
    return filter.transmittance * integrate(band.left, band.right);
}

double spectral_gain(const LedSpectrum& led, const FilterSpec& filter, const ResponsivityModel& resp,
                     double incidence, const WavelengthRange& range)
{
    return SpectralGainTable(led, resp, range).gain(filter, incidence);
}

} // namespace vlcmux
