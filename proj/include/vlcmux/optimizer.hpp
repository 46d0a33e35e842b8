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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace vlcmux {

/// Box constraints plus the plausible sub-box used to draw starting points.
struct Bounds {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    Eigen::VectorXd plausible_lower;
    Eigen::VectorXd plausible_upper;

    int dims() const { return static_cast<int>(lower.size()); }
    void validate() const;

    Eigen::VectorXd clamp(const Eigen::VectorXd& x) const;
    Eigen::VectorXd to_unit(const Eigen::VectorXd& x) const;
    Eigen::VectorXd from_unit(const Eigen::VectorXd& u) const;
};

struct OptimizerOptions {
    int max_iterations = 200;
    double poll_threshold = 1e-6;
    int search_points = 8;
    double search_radius = 4.0;          // in units of the mesh size
    double sufficient_improvement = 1e-6; // relative, search stage only
    double initial_mesh = 1.0 / 1024.0;
    double initial_poll = 1.0;
};

enum class Stage { Init, Search, Poll, Fail };

const char* stage_name(Stage s);

struct TraceEntry {
    int iteration;
    Stage stage;
    double mesh_size;
    double poll_size;
    double best_value;
};

struct OptimizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    std::vector<TraceEntry> trace;
    int evaluations = 0;
    int start = 0;                   // which start produced the result
    std::vector<double> start_values; // multi-start only
};

/// Objective is maximized.
using Objective = std::function<double(const Eigen::VectorXd&)>;

class OptimizerError : public std::runtime_error {
public:
    OptimizerError(const std::string& what, std::vector<TraceEntry> trace)
        : std::runtime_error(what), trace_(std::move(trace))
    {
    }
    const std::vector<TraceEntry>& trace() const { return trace_; }

private:
    std::vector<TraceEntry> trace_;
};

/// Search/poll direct search in the unit-normalized box. A successful poll
/// doubles mesh and poll sizes, an unsuccessful iteration halves both, and a
/// successful search keeps them. Every candidate is projected into the box
/// before evaluation.
OptimizeResult optimize(const Objective& objective, const Bounds& bounds, const Eigen::VectorXd& x0,
                        const OptimizerOptions& options = {});

/// Runs `extra_starts` first, then `n_starts` points drawn uniformly in the
/// plausible box (start j from stream (seed, j)). Returns the best run; ties
/// keep the earlier run.
OptimizeResult multi_start(const Objective& objective, const Bounds& bounds, int n_starts, std::uint64_t seed,
                           const OptimizerOptions& options = {},
                           const std::vector<Eigen::VectorXd>& extra_starts = {});

void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace);

} // namespace vlcmux
