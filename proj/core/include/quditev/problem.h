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

#ifndef QUDITEV_PROBLEM_H
#define QUDITEV_PROBLEM_H

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quditev/register.h"

namespace quditev {

struct InvalidInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MappingUndefined : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ChargingMode { Bidirectional, Unidirectional };
enum class EncodingKind { BinaryTrips, IntegerTrips };

std::string_view to_string(ChargingMode mode);
std::string_view to_string(EncodingKind enc);
ChargingMode parse_charging_mode(std::string_view text);
EncodingKind parse_encoding(std::string_view text);

/// A trip occupies the closed time window [start, end]; its energy is
/// drawn from the serving EV at `start`.
struct Trip {
    std::size_t start = 0;
    std::size_t end = 0;
    double energy = 0.0;

    bool overlaps(const Trip &other) const;
    bool covers(std::size_t t) const { return start <= t && t <= end; }
    bool operator==(const Trip &) const = default;
};

/// One EV fleet charging + trip-assignment problem. Times are 0-based.
struct ProblemInstance {
    std::size_t n_ev = 1;
    std::size_t horizon = 1;
    std::vector<Trip> trips;
    std::size_t levels = 3;  // charging levels per (ev, time)
    ChargingMode mode = ChargingMode::Bidirectional;
    std::vector<double> prices;  // per time step
    double delta_t = 1.0;
    std::vector<double> e0;     // initial SOC per EV
    std::vector<double> e_min;  // required final SOC per EV
    std::vector<double> e_cap;  // battery capacity per EV
    double p_min = -10.0;
    double p_max = 10.0;
    double lambda = 3.0;  // unserved-trip cost
    double alpha = 10.0;  // constraint penalty factor

    std::size_t num_trips() const { return trips.size(); }
    bool operator==(const ProblemInstance &) const = default;
};

/// Throws InvalidInstance describing the first broken invariant.
void validate(const ProblemInstance &instance);

/// Nonnegative violation magnitude per constraint family; all zero iff feasible.
struct ConstraintReport {
    double valid_assignment = 0.0;  // binary encoding only
    double no_overlap = 0.0;
    double no_charge_during_trip = 0.0;
    double soc_lower = 0.0;
    double soc_upper = 0.0;
    double soc_final = 0.0;
    double grid_lower = 0.0;
    double grid_upper = 0.0;

    double total() const;
    bool feasible() const { return total() == 0.0; }
};

struct Evaluation {
    double base_cost = 0.0;
    ConstraintReport report;
    double total_energy = 0.0;  // base_cost + alpha * report.total()
};

/// Charging sites (n, t) in lexicographic order, then trip sites: (n, i)
/// lexicographic for BinaryTrips, i for IntegerTrips.
Register build_register(const ProblemInstance &instance, EncodingKind enc);

/// Size ratio IntegerTrips / BinaryTrips, 2^(-r n_ev + r log2(n_ev + 1)).
double dimension_ratio(std::size_t n_ev, std::size_t r);

/// Penalized cost model of an instance under one encoding. Precomputes the
/// register and trip overlap structure; evaluation is pure and thread-safe.
class ProblemModel {
   public:
    ProblemModel(ProblemInstance instance, EncodingKind enc);

    const ProblemInstance &instance() const { return instance_; }
    EncodingKind encoding() const { return enc_; }
    const Register &reg() const { return *reg_; }
    const std::shared_ptr<const Register> &reg_ptr() const { return reg_; }

    /// Flat-index site positions.
    std::size_t charging_site(std::size_t ev, std::size_t t) const { return ev * instance_.horizon + t; }
    std::size_t trip_site(std::size_t ev, std::size_t trip) const;

    Evaluation evaluate(const Configuration &config) const;
    Evaluation evaluate_index(std::size_t index) const;
    /// Digits are trusted to fit the register.
    Evaluation evaluate_digits(std::span<const std::size_t> digits) const;
    double total_energy(std::size_t index) const { return evaluate_index(index).total_energy; }
    bool is_feasible(const Configuration &config) const { return evaluate(config).report.feasible(); }

    /// EV index (1-based) serving `trip`, 0 if unserved. For BinaryTrips the
    /// lowest-numbered assigned EV is returned.
    std::size_t assigned_ev(std::span<const std::size_t> digits, std::size_t trip) const;

   private:
    double level(std::span<const std::size_t> digits, std::size_t ev, std::size_t t) const;
    bool serves(std::span<const std::size_t> digits, std::size_t ev, std::size_t trip) const;

    ProblemInstance instance_;
    EncodingKind enc_;
    std::shared_ptr<const Register> reg_;
    std::vector<double> level_values_;
    std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_;
};

Evaluation evaluate(const ProblemInstance &instance, EncodingKind enc, const Configuration &config);
bool is_feasible(const ProblemInstance &instance, EncodingKind enc, const Configuration &config);

/// Integer-feasible configuration -> the binary configuration with the same
/// charging digits and r_{n,i} = [q_i = n]. Throws MappingUndefined on
/// infeasible input.
Configuration map_feasible(const ProblemInstance &instance, const Configuration &integer_config);
/// Inverse of map_feasible on the binary-feasible set.
Configuration unmap_feasible(const ProblemInstance &instance, const Configuration &binary_config);

}  // namespace quditev

#endif
