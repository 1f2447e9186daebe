// Copyright 2026 The quditev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITEV_POWELL_H
#define QUDITEV_POWELL_H

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quditev/rng.h"

namespace quditev {

using Objective = std::function<double(std::span<const double>)>;

struct PowellOptions {
    /// Hard cap on objective calls.
    std::size_t budget = 200;
    /// Line-search bracket tolerance, in parameter-space distance.
    double line_tol = 1e-3;
    /// A sweep improving the value by less than this (relative) terminates.
    double ftol = 1e-4;
    std::size_t max_line_evaluations = 20;
    double initial_step = 1.0;
};

struct TracePoint {
    std::vector<double> x;
    double value = 0.0;
};

enum class StopReason { BudgetExhausted, Converged, NonFiniteValue };

struct OptimizationTrace {
    std::vector<TracePoint> evaluations;
    double best_value = 0.0;
    std::vector<double> best_params;
    std::size_t evaluations_used = 0;
    std::size_t sweeps = 0;
    StopReason reason = StopReason::BudgetExhausted;

    /// best_value after each evaluation.
    std::vector<double> running_best() const;
};

/// Powell's conjugate-direction method with bracketing + Brent line searches.
/// Every objective call is recorded. `directions`, when given, replaces the
/// identity as the initial direction set (rows).
OptimizationTrace minimize(const Objective &objective, std::vector<double> x0, const PowellOptions &options = {},
                           const std::optional<std::vector<std::vector<double>>> &directions = std::nullopt);

/// n_restarts independent uniform draws over [0, 2 pi]^dim.
std::vector<std::vector<double>> restart_schedule(std::size_t dim, std::size_t n_restarts, Rng &rng);

}  // namespace quditev

#endif
