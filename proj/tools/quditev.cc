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

// quditev command-line driver: gen | stats | landscape | bench | trace.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quditev/generator.h"
#include "quditev/harness.h"
#include "quditev/oracle.h"

namespace {

using namespace quditev;

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::string encoding;
    std::vector<std::size_t> layers;
    std::optional<std::size_t> shots;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> instances;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> threads;
};

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("config", o.config_path, "JSON experiment config (defaults apply when omitted)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--preset", o.preset, "Base defaults when no config is given")
        ->check(CLI::IsMember({"bidirectional", "unidirectional"}));
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--encoding", o.encoding, "Trip encoding(s) to run")
        ->check(CLI::IsMember({"binary", "integer", "both"}));
    cmd->add_option("--layers", o.layers, "QAOA depths, e.g. --layers 1 2 3")->delimiter(',');
    cmd->add_option("--shots", o.shots, "Shots per cost estimate");
    cmd->add_option("--budget", o.budget, "Objective evaluations per optimization");
    cmd->add_option("--instances", o.instances, "Instances per trip count");
    cmd->add_option("--runs", o.runs, "Optimization runs per instance");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

ExperimentConfig resolve(const CommonOptions &o) {
    ExperimentConfig c;
    if (!o.config_path.empty()) {
        c = load_config(o.config_path);
    } else if (o.preset == "unidirectional") {
        c = ExperimentConfig::unidirectional_defaults();
    }
    if (o.seed) c.seed = *o.seed;
    if (o.out) c.output_dir = *o.out;
    if (o.encoding == "binary") c.encodings = {EncodingKind::BinaryTrips};
    if (o.encoding == "integer") c.encodings = {EncodingKind::IntegerTrips};
    if (o.encoding == "both") c.encodings = {EncodingKind::BinaryTrips, EncodingKind::IntegerTrips};
    if (!o.layers.empty()) c.layers = o.layers;
    if (o.shots) c.shots = *o.shots;
    if (o.budget) c.budget = *o.budget;
    if (o.instances) c.n_instances = *o.instances;
    if (o.runs) c.n_runs = *o.runs;
    if (o.threads) c.threads = *o.threads;
    validate(c);
    return c;
}

std::ofstream open_in(const std::filesystem::path &dir, const std::string &name) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name);
    if (!out) {
        throw std::runtime_error("cannot write " + (dir / name).string());
    }
    return out;
}

int cmd_gen(const ExperimentConfig &c) {
    const std::filesystem::path dir = c.output_dir / "instances";
    std::filesystem::create_directories(dir);
    for (const BenchmarkInstance &b : make_instances(c)) {
        ProblemClass cls = c.problem;
        cls.trips = b.trips;
        const std::string name = cls.label() + "-i" + std::to_string(b.id) + ".json";
        write_instance_file(dir / name, InstanceFile{b.instance, b.seed, cls});
        std::cout << (dir / name).string() << '\n';
    }
    return 0;
}

int cmd_stats(const ExperimentConfig &c) {
    std::vector<InstanceStatistics> rows;
    const std::vector<BenchmarkInstance> instances = make_instances(c);
    EnumerationOptions eo;
    eo.retention = TableRetention::Never;
    for (const BenchmarkInstance &b : instances) {
        for (EncodingKind enc : c.encodings) {
            const EnumerationResult e = enumerate(b.instance, enc, eo);
            rows.push_back({b.id, enc, b.trips, e.total_count, e.feasible_count, e.optimal_set.size(),
                            e.ground_energy, e.feasible_fraction(), e.optimal_fraction()});
        }
    }
    std::ofstream table = open_in(c.output_dir, "statistics.csv");
    write_statistics_csv(table, rows);
    const std::vector<StatisticsSummary> summary = summarize_statistics(rows);
    std::ofstream box = open_in(c.output_dir, "statistics_summary.csv");
    write_statistics_summary_csv(box, summary);
    write_statistics_summary_csv(std::cout, summary);
    return 0;
}

int cmd_landscape(const ExperimentConfig &c) {
    const std::vector<BenchmarkInstance> instances = make_instances(c);
    const BenchmarkInstance &b = instances.at(c.landscape_instance);
    EnumerationOptions eo;
    eo.retention = TableRetention::Always;
    for (EncodingKind enc : c.encodings) {
        const ProblemModel model(b.instance, enc);
        const EnumerationResult oracle = enumerate(model, eo);
        const LandscapeResult grid = landscape_scan(model, oracle.energy_table, c.landscape, c.shots,
                                                    derive_seed(b.seed, {3, static_cast<std::uint64_t>(enc)}));
        const std::string name = "landscape_" + std::string(to_string(enc)) + ".csv";
        std::ofstream out = open_in(c.output_dir, name);
        write_landscape_csv(out, grid);
        std::cout << to_string(enc) << ": grid mean " << format_real(grid.mean()) << " -> "
                  << (c.output_dir / name).string() << '\n';
    }
    return 0;
}

int cmd_bench(const ExperimentConfig &c) {
    const BenchmarkResult result = run_benchmark(c, [](std::size_t done, std::size_t total) {
        if (done == total || done % 10 == 0) {
            std::cerr << "\r" << done << "/" << total << " runs" << std::flush;
        }
    });
    std::cerr << '\n';
    write_benchmark(c.output_dir, c, result);
    write_summary_csv(std::cout, result.summaries);
    return 0;
}

int cmd_trace(const ExperimentConfig &c, const CommonOptions &o) {
    const std::size_t layers = o.layers.empty() ? c.trace_layers : o.layers.front();
    const std::size_t budget = o.budget ? *o.budget : c.trace_budget;
    const std::vector<BenchmarkInstance> instances = make_instances(c);
    std::vector<ProgressCurve> curves;
    for (EncodingKind enc : c.encodings) {
        curves.push_back(progress_trace(instances, enc, layers, budget, c.shots, c.n_runs, c.optimizer, c.threads));
        std::cout << to_string(enc) << ": best after " << budget << " evaluations "
                  << format_real(curves.back().mean_best.back()) << '\n';
    }
    std::ofstream out = open_in(c.output_dir, "trace.csv");
    write_trace_csv(out, curves);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Qudit vs qubit trip encodings for QAOA on EV charging + trip assignment"};
    app.require_subcommand(1);

    CommonOptions gen_opts, stats_opts, land_opts, bench_opts, trace_opts;
    CLI::App *gen = app.add_subcommand("gen", "Write seeded instance files");
    CLI::App *stats = app.add_subcommand("stats", "Feasible/optimal fractions by full enumeration");
    CLI::App *land = app.add_subcommand("landscape", "L=1 cost landscape over (beta, gamma)");
    CLI::App *bench = app.add_subcommand("bench", "Full optimization sweep");
    CLI::App *trace = app.add_subcommand("trace", "Best-so-far progress curves");
    add_common(gen, gen_opts);
    add_common(stats, stats_opts);
    add_common(land, land_opts);
    add_common(bench, bench_opts);
    add_common(trace, trace_opts);

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return cmd_gen(resolve(gen_opts));
        if (stats->parsed()) return cmd_stats(resolve(stats_opts));
        if (land->parsed()) return cmd_landscape(resolve(land_opts));
        if (bench->parsed()) return cmd_bench(resolve(bench_opts));
        if (trace->parsed()) return cmd_trace(resolve(trace_opts), trace_opts);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
