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

#include "vlcmux/plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace vlcmux {

namespace {

constexpr double width = 720.0;
constexpr double height = 480.0;
constexpr double margin_left = 70.0;
constexpr double margin_right = 140.0;
constexpr double margin_top = 30.0;
constexpr double margin_bottom = 55.0;

const char* colour(Variant v)
{
    switch (v) {
    case Variant::Sd:
        return "#1f77b4";
    case Variant::Wd:
        return "#d62728";
    case Variant::WdNoProcessing:
        return "#ff7f0e";
    case Variant::Scwd:
        return "#2ca02c";
    }
    return "#000000";
}

double nice_step(double span)
{
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag)
            return m * mag;
    return 10.0 * mag;
}

} // namespace

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows)
{
    std::map<Variant, std::vector<const SweepRow*>> series;
    int i_min = 1, i_max = 1;
    double y_max = 1.0;
    if (!rows.empty()) {
        i_min = i_max = rows.front().elements;
    }
    for (const auto& r : rows) {
        series[r.variant].push_back(&r);
        i_min = std::min(i_min, r.elements);
        i_max = std::max(i_max, r.elements);
        y_max = std::max(y_max, (r.estimate.mean + r.estimate.standard_error) / 1e6);
    }
    const double step = nice_step(y_max);
    y_max = std::ceil(y_max / step) * step;
    const double x_span = std::max(1, i_max - i_min);

    const double pw = width - margin_left - margin_right;
    const double ph = height - margin_top - margin_bottom;
    auto px = [&](double i) { return margin_left + (i - i_min) / x_span * pw; };
    auto py = [&](double mbps) { return margin_top + ph * (1.0 - mbps / y_max); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (double y = 0.0; y <= y_max + 1e-9; y += step) {
        out << "<line x1=\"" << margin_left << "\" y1=\"" << py(y) << "\" x2=\"" << margin_left + pw << "\" y2=\""
            << py(y) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << margin_left - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">" << y
            << "</text>\n";
    }
    for (int i = i_min; i <= i_max; ++i)
        out << "<text x=\"" << px(i) << "\" y=\"" << margin_top + ph + 18 << "\" text-anchor=\"middle\">" << i
            << "</text>\n";
    out << "<rect x=\"" << margin_left << "\" y=\"" << margin_top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << margin_left + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">Number of elements</text>\n";
    out << "<text transform=\"translate(18," << margin_top + ph / 2
        << ") rotate(-90)\" text-anchor=\"middle\">Average achievable rate [Mbit/s]</text>\n";

    int legend = 0;
    for (auto& [variant, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](auto* a, auto* b) { return a->elements < b->elements; });
        out << "<polyline fill=\"none\" stroke=\"" << colour(variant) << "\" stroke-width=\"2\" points=\"";
        for (const auto* r : pts)
            out << px(r->elements) << ',' << py(r->estimate.mean / 1e6) << ' ';
        out << "\"/>\n";
        for (const auto* r : pts) {
            const double m = r->estimate.mean / 1e6, e = r->estimate.standard_error / 1e6;
            out << "<line x1=\"" << px(r->elements) << "\" y1=\"" << py(m - e) << "\" x2=\"" << px(r->elements)
                << "\" y2=\"" << py(m + e) << "\" stroke=\"" << colour(variant) << "\"/>\n";
            out << "<circle cx=\"" << px(r->elements) << "\" cy=\"" << py(m) << "\" r=\"3\" fill=\""
                << colour(variant) << "\"/>\n";
        }
        const double ly = margin_top + 10 + 20 * legend++;
        out << "<line x1=\"" << margin_left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << margin_left + pw + 36
            << "\" y2=\"" << ly << "\" stroke=\"" << colour(variant) << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << margin_left + pw + 42 << "\" y=\"" << ly + 4 << "\">" << variant_name(variant)
            << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace vlcmux
