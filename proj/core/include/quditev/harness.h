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

#ifndef QUDITEV_HARNESS_H
#define QUDITEV_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quditev/generator.h"
#include "quditev/oracle.h"
#include "quditev/powell.h"
#include "quditev/problem.h"
#include "quditev/qaoa.h"

namespace quditev {

struct LandscapeGrid {
    double beta_min = 0.0;
    double beta_max = 3.14159265358979323846;
    std::size_t beta_steps = 41;
    double gamma_min = 0.0;
    double gamma_max = 1.0;
    std::size_t gamma_steps = 41;
};

struct ExperimentConfig {
    ProblemClass problem = ProblemClass::bidirectional_benchmark();
    /// One instance set per trip count; overrides problem.trips.
    std::vector<std::size_t> trip_counts{2};
    std::size_t n_instances = 10;
    std::size_t n_runs = 10;
    std::vector<std::size_t> layers{1, 2, 3, 4};
    std::size_t shots = 256;
    std::size_t budget = 200;
    std::uint64_t seed = 20260101;
    std::vector<EncodingKind> encodings{EncodingKind::BinaryTrips, EncodingKind::IntegerTrips};
    std::filesystem::path output_dir = "out";
    /// 0 = hardware concurrency.
    std::size_t threads = 0;
    PowellOptions optimizer;

    LandscapeGrid landscape;
    std::size_t landscape_instance = 0;
    std::size_t trace_layers = 3;
    std::size_t trace_budget = 1000;

    static ExperimentConfig bidirectional_defaults();
    static ExperimentConfig unidirectional_defaults();
};

void validate(const ExperimentConfig &config);
ExperimentConfig config_from_json(const std::string &text);
std::string config_to_json(const ExperimentConfig &config);
ExperimentConfig load_config(const std::filesystem::path &path);

struct BenchmarkInstance {
    std::size_t id = 0;  // index within its trip count
    std::size_t trips = 0;
    std::uint64_t seed = 0;
    ProblemInstance instance;
};

/// Seeded instance sets, ordered by (trip count, id).
std::vector<BenchmarkInstance> make_instances(const ExperimentConfig &config);

struct SampleMetrics {
    double delta_e_mean = 0.0;
    double delta_e_min = 0.0;
    bool success = false;
    std::size_t feasible = 0;
};

/// Gap / success / feasibility metrics of a final sample multiset.
SampleMetrics compute_metrics(std::span<const std::size_t> samples, const ProblemModel &model,
                              const EnumerationResult &oracle);

struct RunRecord {
    std::size_t instance_id = 0;
    std::size_t trips = 0;
    EncodingKind encoding = EncodingKind::IntegerTrips;
    std::size_t layers = 0;
    std::size_t run = 0;
    double final_mean_energy = 0.0;
    SampleMetrics metrics;
    std::size_t shots = 0;
    std::size_t evaluations = 0;
    std::size_t shots_consumed = 0;
    double best_value = 0.0;
    StopReason stop = StopReason::BudgetExhausted;
    double max_norm_deviation = 0.0;
    double seconds = 0.0;
    std::vector<double> running_best;  // kept only when requested
};

struct RunSpec {
    std::size_t instance_id = 0;
    std::size_t layers = 1;
    std::size_t run = 0;
    std::size_t shots = 256;
    PowellOptions optimizer;
    std::uint64_t instance_seed = 0;
    bool keep_trace = false;
};

/// One full optimization: random start, shot-based Powell, fresh final draw.
RunRecord execute_run(const ProblemModel &model, const EnumerationResult &oracle, const RunSpec &spec);

/// Initial angles of a run; shared by both encodings of an instance.
std::vector<double> initial_parameters(std::uint64_t instance_seed, std::size_t layers, std::size_t run,
                                       std::size_t dim);

struct Summary {
    EncodingKind encoding = EncodingKind::IntegerTrips;
    std::size_t trips = 0;
    std::size_t layers = 0;
    std::size_t instances = 0;
    std::size_t records = 0;
    double success_probability = 0.0;  // r
    double feasible_fraction = 0.0;    // f
    Distribution delta_e_mean;         // pooled over runs and instances
    Distribution delta_e_min;
    Distribution instance_delta_e_mean;  // per-instance run means
    /// Mean over instances of the across-run standard deviation of delta_e_mean.
    double run_dispersion = 0.0;
    double mean_seconds = 0.0;
};

std::vector<Summary> aggregate(std::span<const RunRecord> records);

struct LandscapeResult {
    std::vector<double> betas;
    std::vector<double> gammas;
    std::vector<double> values;  // values[g * betas.size() + b]

    double at(std::size_t gamma_index, std::size_t beta_index) const {
        return values[gamma_index * betas.size() + beta_index];
    }
    double mean() const;
};

/// L = 1, beta2 = 0 shot-based cost over a (beta, gamma) grid.
LandscapeResult landscape_scan(const ProblemModel &model, std::shared_ptr<const std::vector<double>> energies,
                               const LandscapeGrid &grid, std::size_t shots, std::uint64_t seed);

struct ProgressCurve {
    EncodingKind encoding = EncodingKind::IntegerTrips;
    std::size_t layers = 0;
    std::size_t runs = 0;
    std::vector<double> mean_best;  // index k: after k+1 evaluations
};

/// Running-best shot estimate per evaluation, averaged across instances and
/// runs. Runs that stop early hold their final value.
ProgressCurve progress_trace(std::span<const BenchmarkInstance> instances, EncodingKind enc, std::size_t layers,
                             std::size_t budget, std::size_t shots, std::size_t n_runs, const PowellOptions &optimizer,
                             std::size_t threads = 1);

struct BenchmarkResult {
    std::vector<InstanceStatistics> statistics;
    std::vector<RunRecord> records;
    std::vector<Summary> summaries;
};

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

BenchmarkResult run_benchmark(const ExperimentConfig &config, const ProgressCallback &progress = {});

/// Runs `count` independent tasks on `threads` workers (0 = hardware).
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &task);

// CSV writers. Floats use 12 significant digits.
std::string format_real(double value);
void write_runs_csv(std::ostream &out, std::span<const RunRecord> records);
void write_timing_csv(std::ostream &out, std::span<const RunRecord> records);
void write_summary_csv(std::ostream &out, std::span<const Summary> summaries);
void write_runtime_summary_csv(std::ostream &out, std::span<const Summary> summaries);
void write_instance_summary_csv(std::ostream &out, std::span<const RunRecord> records);
void write_landscape_csv(std::ostream &out, const LandscapeResult &grid);
void write_trace_csv(std::ostream &out, std::span<const ProgressCurve> curves);

/// Writes config.json, statistics.csv, runs.csv, summary.csv and
/// instance_summary.csv (all deterministic per seed) plus timing.csv and
/// runtime_summary.csv (wall-clock) into `dir`.
void write_benchmark(const std::filesystem::path &dir, const ExperimentConfig &config, const BenchmarkResult &result);

}  // namespace quditev

#endif
