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

#include "vlcmux/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

#include "vlcmux/random.hpp"

namespace vlcmux {

void Bounds::validate() const
{
    const auto n = lower.size();
    if (n == 0 || upper.size() != n || plausible_lower.size() != n || plausible_upper.size() != n)
        throw std::invalid_argument("bounds: vectors must be non-empty and of equal length");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(std::isfinite(lower(i)) && std::isfinite(upper(i))))
            throw std::invalid_argument("bounds: limits must be finite");
        if (!(lower(i) <= plausible_lower(i) && plausible_lower(i) <= plausible_upper(i)
              && plausible_upper(i) <= upper(i)))
            throw std::invalid_argument("bounds: need lower <= plausible lower <= plausible upper <= upper");
    }
}

Eigen::VectorXd Bounds::clamp(const Eigen::VectorXd& x) const
{
    return x.cwiseMax(lower).cwiseMin(upper);
}

Eigen::VectorXd Bounds::to_unit(const Eigen::VectorXd& x) const
{
    Eigen::VectorXd u(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double range = upper(i) - lower(i);
        u(i) = range > 0.0 ? (x(i) - lower(i)) / range : 0.0;
    }
    return u;
}

Eigen::VectorXd Bounds::from_unit(const Eigen::VectorXd& u) const
{
    Eigen::VectorXd x = lower + (upper - lower).cwiseProduct(u);
    return clamp(x);
}

const char* stage_name(Stage s)
{
    switch (s) {
    case Stage::Init:
        return "init";
    case Stage::Search:
        return "search";
    case Stage::Poll:
        return "poll";
    case Stage::Fail:
        return "fail";
    }
    return "?";
}

namespace {

// radical inverse in base `b`
double halton(std::uint64_t index, int base)
{
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::vector<int> first_primes(int n)
{
    std::vector<int> primes;
    for (int c = 2; static_cast<int>(primes.size()) < n; ++c) {
        bool prime = true;
        for (int p : primes) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(c);
    }
    return primes;
}

} // namespace

OptimizeResult optimize(const Objective& objective, const Bounds& bounds, const Eigen::VectorXd& x0,
                        const OptimizerOptions& options)
{
    bounds.validate();
    const int d = bounds.dims();
    if (x0.size() != d)
        throw std::invalid_argument("optimize: starting point has the wrong dimension");

    OptimizeResult res;
    // Points are evaluated in user coordinates; the best one is kept verbatim so
    // that a start point is returned bit-exactly when nothing beats it.
    auto eval = [&](const Eigen::VectorXd& x) {
        ++res.evaluations;
        try {
            const double v = objective(x);
            if (!std::isfinite(v))
                throw std::runtime_error("objective returned a non-finite value");
            return v;
        } catch (const std::exception& e) {
            throw OptimizerError(std::string("objective failed: ") + e.what(), res.trace);
        }
    };

    const std::vector<int> primes = first_primes(d);
    std::uint64_t halton_index = 1;
    double mesh = options.initial_mesh;
    double poll = options.initial_poll;

    Eigen::VectorXd best_x = bounds.clamp(x0);
    Eigen::VectorXd u = bounds.to_unit(best_x);
    double best = eval(best_x);
    res.trace.push_back({0, Stage::Init, mesh, poll, best});

    for (int iter = 1; iter <= options.max_iterations && poll > options.poll_threshold; ++iter) {
        Stage stage = Stage::Fail;

        const double radius = options.search_radius * mesh;
        for (int s = 0; s < options.search_points; ++s, ++halton_index) {
            Eigen::VectorXd cand(d);
            for (int i = 0; i < d; ++i)
                cand(i) = u(i) + radius * (2.0 * halton(halton_index, primes[i]) - 1.0);
            cand = cand.cwiseMax(0.0).cwiseMin(1.0);
            Eigen::VectorXd x = bounds.from_unit(cand);
            const double v = eval(x);
            if (v > best + options.sufficient_improvement * std::abs(best) && v > best) {
                u = cand;
                best_x = std::move(x);
                best = v;
                stage = Stage::Search;
                ++halton_index;
                break;
            }
        }

        if (stage == Stage::Fail) {
            for (int dir = 0; dir < 2 * d && stage == Stage::Fail; ++dir) {
                Eigen::VectorXd cand = u;
                const int i = dir / 2;
                cand(i) = std::clamp(u(i) + (dir % 2 == 0 ? poll : -poll), 0.0, 1.0);
                if (cand(i) == u(i))
                    continue;
                Eigen::VectorXd x = bounds.from_unit(cand);
                const double v = eval(x);
                if (v > best) {
                    u = cand;
                    best_x = std::move(x);
                    best = v;
                    stage = Stage::Poll;
                }
            }
        }

        if (stage == Stage::Poll) {
            mesh *= 2.0;
            poll *= 2.0;
        } else if (stage == Stage::Fail) {
            mesh *= 0.5;
            poll *= 0.5;
        }
        res.trace.push_back({iter, stage, mesh, poll, best});
    }

    res.x = std::move(best_x);
    res.value = best;
    return res;
}

OptimizeResult multi_start(const Objective& objective, const Bounds& bounds, int n_starts, std::uint64_t seed,
                           const OptimizerOptions& options, const std::vector<Eigen::VectorXd>& extra_starts)
{
    bounds.validate();
    if (n_starts < 0 || (n_starts == 0 && extra_starts.empty()))
        throw std::invalid_argument("multi_start: need at least one start");
    std::vector<Eigen::VectorXd> starts = extra_starts;
    for (int j = 0; j < n_starts; ++j) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(j));
        Eigen::VectorXd x(bounds.dims());
        for (int i = 0; i < bounds.dims(); ++i)
            x(i) = rng.uniform(bounds.plausible_lower(i), bounds.plausible_upper(i));
        starts.push_back(x);
    }

    OptimizeResult best;
    std::vector<double> values;
    int total_evals = 0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        OptimizeResult r = optimize(objective, bounds, starts[s], options);
        total_evals += r.evaluations;
        values.push_back(r.value);
        if (s == 0 || r.value > best.value) {
            best = std::move(r);
            best.start = static_cast<int>(s);
        }
    }
    best.evaluations = total_evals;
    best.start_values = std::move(values);
    return best;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace)
{
    out << "iter,stage,delta_m,delta_p,best_value\n";
    out.precision(17);
    for (const auto& t : trace)
        out << t.iteration << ',' << stage_name(t.stage) << ',' << t.mesh_size << ',' << t.poll_size << ','
            << t.best_value << '\n';
}

} // namespace vlcmux
