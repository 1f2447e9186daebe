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

#ifndef QUDITEV_GENERATOR_H
#define QUDITEV_GENERATOR_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "quditev/problem.h"

namespace quditev {

/// Closed sampling interval [lo, hi].
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const Range &) const = default;
};

/// Parameters of a random instance family.
struct ProblemClass {
    ChargingMode mode = ChargingMode::Bidirectional;
    std::size_t levels = 3;
    std::size_t n_ev = 3;
    std::size_t horizon = 2;
    std::size_t trips = 2;

    Range price{0.3, 4.0};
    Range energy_deficit{0.0, 2.0};  // e_min - e0
    Range trip_energy{0.0, 2.0};
    double e0 = 3.0;
    double e_cap = 100.0;
    double p_max = 10.0;  // p_min = -p_max
    double delta_t = 1.0;
    double lambda = 3.0;
    double alpha = 10.0;

    /// d = 3 bi-directional, 3 EVs, 2 time steps, 2 trips.
    static ProblemClass bidirectional_benchmark();
    /// d = 2 uni-directional, 2 EVs, 3 time steps, `trips` trips.
    static ProblemClass unidirectional_benchmark(std::size_t trips);

    std::string label() const;
    bool operator==(const ProblemClass &) const = default;
};

/// Throws std::invalid_argument for inconsistent class parameters.
void validate(const ProblemClass &cls);

/// Draws a random instance. Sampling order: prices c_t for t = 0..T-1, then
/// per trip its start time (end = start) and energy, then per EV its energy
/// deficit. Deterministic per seed.
ProblemInstance generate_instance(const ProblemClass &cls, std::uint64_t seed);

/// Instance document with optional generator provenance.
struct InstanceFile {
    ProblemInstance instance;
    std::optional<std::uint64_t> seed;
    std::optional<ProblemClass> problem_class;
};

std::string instance_to_json(const InstanceFile &file);
InstanceFile instance_from_json(const std::string &text);
void write_instance_file(const std::filesystem::path &path, const InstanceFile &file);
InstanceFile read_instance_file(const std::filesystem::path &path);

}  // namespace quditev

#endif
