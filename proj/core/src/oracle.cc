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

#include "quditev/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "quditev/harness.h"

namespace quditev {

bool EnumerationResult::is_optimal(std::size_t index) const {
    return std::binary_search(optimal_set.begin(), optimal_set.end(), index);
}

double EnumerationResult::feasible_fraction() const {
    return static_cast<double>(feasible_count) / static_cast<double>(total_count);
}

double EnumerationResult::optimal_fraction() const {
    return static_cast<double>(optimal_set.size()) / static_cast<double>(total_count);
}

EnumerationResult enumerate(const ProblemModel &model, const EnumerationOptions &options) {
    const Register &reg = model.reg();
    const std::size_t total = reg.total_size();
    if (total > options.size_cap) {
        throw EnumerationTooLarge("configuration space has " + std::to_string(total) +
                                  " states, enumeration cap is " + std::to_string(options.size_cap));
    }
    const bool retain = options.retention == TableRetention::Always ||
                        (options.retention == TableRetention::Automatic && total < options.automatic_retention_limit);

    std::vector<double> energies(total);
    EnumerationResult result;
    result.total_count = total;

    // Odometer over digits; the last site is least significant.
    const std::size_t n_sites = reg.num_sites();
    std::vector<std::size_t> digits(n_sites, 0);
    double ground = std::numeric_limits<double>::infinity();
    for (std::size_t index = 0; index < total; ++index) {
        const Evaluation e = model.evaluate_digits(digits);
        energies[index] = e.total_energy;
        ground = std::min(ground, e.total_energy);
        if (e.report.feasible()) {
            ++result.feasible_count;
        }
        for (std::size_t k = n_sites; k-- > 0;) {
            if (++digits[k] < reg.dimension(k)) {
                break;
            }
            digits[k] = 0;
        }
    }
    result.ground_energy = ground;
    for (std::size_t index = 0; index < total; ++index) {
        if (energies[index] - ground <= options.optimal_tolerance) {
            result.optimal_set.push_back(index);
        }
    }
    if (retain) {
        result.energy_table = std::make_shared<const std::vector<double>>(std::move(energies));
    }
    return result;
}

EnumerationResult enumerate(const ProblemInstance &instance, EncodingKind enc, const EnumerationOptions &options) {
    return enumerate(ProblemModel(instance, enc), options);
}

namespace {

double quantile(const std::vector<double> &sorted, double q) {
    if (sorted.size() == 1) {
        return sorted.front();
    }
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - w) + sorted[hi] * w;
}

}  // namespace

Distribution summarize(std::span<const double> values) {
    Distribution d;
    d.count = values.size();
    if (values.empty()) {
        return d;
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    d.min = sorted.front();
    d.max = sorted.back();
    d.q1 = quantile(sorted, 0.25);
    d.median = quantile(sorted, 0.5);
    d.q3 = quantile(sorted, 0.75);
    d.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return d;
}

std::vector<InstanceStatistics> instance_statistics(std::span<const ProblemInstance> instances, EncodingKind enc,
                                                    const EnumerationOptions &options) {
    EnumerationOptions opts = options;
    opts.retention = TableRetention::Never;
    std::vector<InstanceStatistics> rows;
    rows.reserve(instances.size());
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const EnumerationResult e = enumerate(instances[k], enc, opts);
        InstanceStatistics s;
        s.instance_id = k;
        s.encoding = enc;
        s.trips = instances[k].num_trips();
        s.total = e.total_count;
        s.feasible = e.feasible_count;
        s.optimal = e.optimal_set.size();
        s.ground_energy = e.ground_energy;
        s.feasible_fraction = e.feasible_fraction();
        s.optimal_fraction = e.optimal_fraction();
        rows.push_back(s);
    }
    return rows;
}

void write_statistics_csv(std::ostream &out, std::span<const InstanceStatistics> rows) {
    out << "instance,encoding,trips,total,feasible,optimal,ground_energy,feasible_fraction,optimal_fraction\n";
    for (const InstanceStatistics &s : rows) {
        out << s.instance_id << ',' << to_string(s.encoding) << ',' << s.trips << ',' << s.total << ','
            << s.feasible << ',' << s.optimal << ',' << format_real(s.ground_energy) << ','
            << format_real(s.feasible_fraction) << ',' << format_real(s.optimal_fraction) << '\n';
    }
}

std::vector<StatisticsSummary> summarize_statistics(std::span<const InstanceStatistics> rows) {
    std::vector<std::pair<EncodingKind, std::size_t>> keys;
    for (const InstanceStatistics &s : rows) {
        const std::pair key{s.encoding, s.trips};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(key);
        }
    }
    std::sort(keys.begin(), keys.end());
    std::vector<StatisticsSummary> out;
    for (const auto &[enc, trips] : keys) {
        std::vector<double> feasible;
        std::vector<double> optimal;
        for (const InstanceStatistics &s : rows) {
            if (s.encoding == enc && s.trips == trips) {
                feasible.push_back(s.feasible_fraction);
                optimal.push_back(s.optimal_fraction);
            }
        }
        out.push_back({enc, trips, summarize(feasible), summarize(optimal)});
    }
    return out;
}

void write_statistics_summary_csv(std::ostream &out, std::span<const StatisticsSummary> rows) {
    out << "encoding,trips,metric,count,min,q1,median,q3,max,mean\n";
    for (const StatisticsSummary &s : rows) {
        for (const auto &[name, d] : {std::pair{"feasible_fraction", &s.feasible_fraction},
                                      std::pair{"optimal_fraction", &s.optimal_fraction}}) {
            out << to_string(s.encoding) << ',' << s.trips << ',' << name << ',' << d->count << ','
                << format_real(d->min) << ',' << format_real(d->q1) << ',' << format_real(d->median) << ','
                << format_real(d->q3) << ',' << format_real(d->max) << ',' << format_real(d->mean) << '\n';
        }
    }
}

}  // namespace quditev
