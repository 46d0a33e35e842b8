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

#include <vector>

namespace vlcmux {

// Wavelength-domain models. All wavelengths are in meters.

struct WavelengthRange {
    double min = 400e-9;
    double max = 700e-9;
};

struct LedSpectrum {
    double center = 550e-9;
    double half_width = 0.0; // shape parameter, see delta_lambda_half()

    static LedSpectrum centered_at(double center);
};

struct ResponsivityModel {
    double quantum_efficiency = 0.8;
};

/// Ideal thin-film bandpass filter. Both edges move to shorter wavelengths
/// as the incidence angle grows.
struct FilterSpec {
    double center = 550e-9;
    double width = 300e-9;
    double effective_index = 2.0;
    double transmittance = 1.0;

    void validate() const;
};

struct Passband {
    double left;
    double right;
};

/// Spectral width parameter at a 300 K junction. The 560 nm branch point
/// belongs to the short-wavelength branch.
double delta_lambda_half(double center);

/// Normalized two-Gaussian LED spectrum (1/m); integrates to one over (0, inf).
double led_psd(double lambda, const LedSpectrum& spectrum);

/// Photodiode responsivity in A/W.
double responsivity(double lambda, const ResponsivityModel& model);

/// Throws std::invalid_argument for incidence at or beyond pi/2.
Passband filter_passband(const FilterSpec& spec, double incidence);

double filter_transmittance(double lambda, double incidence, const FilterSpec& spec);

/// Cumulative trapezoid table of responsivity * LED spectrum on a fixed grid.
/// Window integrals insert the window edges as extra nodes, so a query is the
/// composite trapezoid rule on the grid refined by the brick-wall edges.
class SpectralGainTable {
public:
    static constexpr double default_step = 0.25e-9;

    SpectralGainTable(const LedSpectrum& led, const ResponsivityModel& resp, const WavelengthRange& range,
                      double step = default_step);

    /// Integral of R*S over [lo, hi] clipped to the table range.
    double integrate(double lo, double hi) const;

    /// Photocurrent per watt through `filter` at incidence angle `incidence`.
    double gain(const FilterSpec& filter, double incidence) const;

    const LedSpectrum& led() const { return led_; }

private:
    double node(std::size_t j) const { return range_.min + static_cast<double>(j) * step_; }
    double integrand(double lambda) const;

    LedSpectrum led_;
    ResponsivityModel resp_;
    WavelengthRange range_;
    double step_;
    std::vector<double> values_;
    std::vector<double> cumulative_;
};

/// Integral over [range.min, range.max] of R * S * filter transmittance (A/W).
double spectral_gain(const LedSpectrum& led, const FilterSpec& filter, const ResponsivityModel& resp,
                     double incidence, const WavelengthRange& range = {});

} // namespace vlcmux
