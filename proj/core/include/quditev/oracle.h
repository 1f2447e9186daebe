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

#ifndef QUDITEV_ORACLE_H
#define QUDITEV_ORACLE_H

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quditev/problem.h"

namespace quditev {

struct EnumerationTooLarge : std::length_error {
    using std::length_error::length_error;
};

enum class TableRetention { Automatic, Always, Never };

struct EnumerationOptions {
    std::size_t size_cap = 1'000'000;
    TableRetention retention = TableRetention::Automatic;
    std::size_t automatic_retention_limit = 100'000;
    /// Energies within this distance of the minimum count as optimal.
    double optimal_tolerance = 1e-9;
};

struct EnumerationResult {
    double ground_energy = 0.0;
    std::vector<std::size_t> optimal_set;  // sorted flat indices
    std::size_t feasible_count = 0;
    std::size_t total_count = 0;
    /// total_energy per flat index; null when not retained.
    std::shared_ptr<const std::vector<double>> energy_table;

    bool is_optimal(std::size_t index) const;
    double feasible_fraction() const;
    double optimal_fraction() const;
};

/// Exhaustive evaluation of every configuration. Throws EnumerationTooLarge
/// above options.size_cap.
EnumerationResult enumerate(const ProblemModel &model, const EnumerationOptions &options = {});
EnumerationResult enumerate(const ProblemInstance &instance, EncodingKind enc,
                            const EnumerationOptions &options = {});

/// Min, quartiles and max of a sample (linear interpolation between order
/// statistics).
struct Distribution {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::size_t count = 0;
};

Distribution summarize(std::span<const double> values);

struct InstanceStatistics {
    std::size_t instance_id = 0;
    EncodingKind encoding = EncodingKind::IntegerTrips;
    std::size_t trips = 0;
    std::size_t total = 0;
    std::size_t feasible = 0;
    std::size_t optimal = 0;
    double ground_energy = 0.0;
    double feasible_fraction = 0.0;
    double optimal_fraction = 0.0;
};

std::vector<InstanceStatistics> instance_statistics(std::span<const ProblemInstance> instances, EncodingKind enc,
                                                    const EnumerationOptions &options = {});

/// Box-plot data of the fractions per (encoding, trip count).
struct StatisticsSummary {
    EncodingKind encoding = EncodingKind::IntegerTrips;
    std::size_t trips = 0;
    Distribution feasible_fraction;
    Distribution optimal_fraction;
};

std::vector<StatisticsSummary> summarize_statistics(std::span<const InstanceStatistics> rows);

/// CSV: instance,encoding,trips,total,feasible,optimal,ground_energy,
/// feasible_fraction,optimal_fraction
void write_statistics_csv(std::ostream &out, std::span<const InstanceStatistics> rows);
void write_statistics_summary_csv(std::ostream &out, std::span<const StatisticsSummary> rows);

}  // namespace quditev

#endif
