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

#include "quditev/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json_codec.h"

namespace quditev {

namespace {

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::BudgetExhausted: return "budget";
        case StopReason::Converged: return "converged";
        case StopReason::NonFiniteValue: return "non_finite";
    }
    return "unknown";
}

double sample_stddev(std::span<const double> values) {
    if (values.size() < 2) {
        return 0.0;
    }
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out[k] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    return out;
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    return out;
}

void finish(std::ofstream &out, const std::filesystem::path &path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

ExperimentConfig ExperimentConfig::bidirectional_defaults() { return ExperimentConfig{}; }

ExperimentConfig ExperimentConfig::unidirectional_defaults() {
    ExperimentConfig c;
    c.problem = ProblemClass::unidirectional_benchmark(2);
    c.trip_counts = {2, 3, 4};
    return c;
}

void validate(const ExperimentConfig &c) {
    auto fail = [](const std::string &what) { throw std::invalid_argument("invalid experiment config: " + what); };
    validate(c.problem);
    if (c.trip_counts.empty()) fail("trip_counts is empty");
    if (c.n_instances == 0 || c.n_runs == 0) fail("n_instances and n_runs must be >= 1");
    if (c.layers.empty()) fail("layers is empty");
    for (std::size_t l : c.layers) {
        if (l == 0) fail("layer counts must be >= 1");
    }
    if (c.shots == 0) fail("shots must be >= 1");
    if (c.encodings.empty()) fail("no encodings selected");
    if (c.landscape.beta_steps == 0 || c.landscape.gamma_steps == 0) fail("landscape grid needs >= 1 step");
    if (c.trace_layers == 0) fail("trace layers must be >= 1");
    if (c.landscape_instance >= c.n_instances) fail("landscape instance out of range");
}

ExperimentConfig config_from_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        const std::string preset = j.value("preset", std::string("bidirectional"));
        if (preset == "unidirectional") {
            c = ExperimentConfig::unidirectional_defaults();
        } else if (preset != "bidirectional") {
            throw std::invalid_argument("unknown preset '" + preset + "'");
        }
        if (j.contains("problem")) {
            ProblemClass cls = c.problem;
            from_json(j.at("problem"), cls);
            c.problem = cls;
        }
        if (j.contains("trip_counts")) c.trip_counts = j.at("trip_counts").get<std::vector<std::size_t>>();
        if (j.contains("n_instances")) c.n_instances = j.at("n_instances").get<std::size_t>();
        if (j.contains("n_runs")) c.n_runs = j.at("n_runs").get<std::size_t>();
        if (j.contains("layers")) c.layers = j.at("layers").get<std::vector<std::size_t>>();
        if (j.contains("shots")) c.shots = j.at("shots").get<std::size_t>();
        if (j.contains("budget")) c.budget = j.at("budget").get<std::size_t>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("encodings")) {
            c.encodings.clear();
            for (const auto &e : j.at("encodings")) {
                c.encodings.push_back(parse_encoding(e.get<std::string>()));
            }
        }
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("threads")) c.threads = j.at("threads").get<std::size_t>();
        if (j.contains("optimizer")) {
            const Json &o = j.at("optimizer");
            c.optimizer.line_tol = o.value("line_tol", c.optimizer.line_tol);
            c.optimizer.ftol = o.value("ftol", c.optimizer.ftol);
            c.optimizer.max_line_evaluations = o.value("max_line_evaluations", c.optimizer.max_line_evaluations);
            c.optimizer.initial_step = o.value("initial_step", c.optimizer.initial_step);
        }
        if (j.contains("landscape")) {
            const Json &g = j.at("landscape");
            c.landscape.beta_min = g.value("beta_min", c.landscape.beta_min);
            c.landscape.beta_max = g.value("beta_max", c.landscape.beta_max);
            c.landscape.beta_steps = g.value("beta_steps", c.landscape.beta_steps);
            c.landscape.gamma_min = g.value("gamma_min", c.landscape.gamma_min);
            c.landscape.gamma_max = g.value("gamma_max", c.landscape.gamma_max);
            c.landscape.gamma_steps = g.value("gamma_steps", c.landscape.gamma_steps);
            c.landscape_instance = g.value("instance", c.landscape_instance);
        }
        if (j.contains("trace")) {
            const Json &t = j.at("trace");
            c.trace_layers = t.value("layers", c.trace_layers);
            c.trace_budget = t.value("budget", c.trace_budget);
        }
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    validate(c);
    return c;
}

std::string config_to_json(const ExperimentConfig &c) {
    Json j;
    j["problem"] = c.problem;
    j["trip_counts"] = c.trip_counts;
    j["n_instances"] = c.n_instances;
    j["n_runs"] = c.n_runs;
    j["layers"] = c.layers;
    j["shots"] = c.shots;
    j["budget"] = c.budget;
    j["seed"] = c.seed;
    Json encs = Json::array();
    for (EncodingKind e : c.encodings) {
        encs.push_back(to_string(e));
    }
    j["encodings"] = encs;
    j["output_dir"] = c.output_dir.string();
    j["threads"] = c.threads;
    j["optimizer"] = {{"line_tol", c.optimizer.line_tol},
                      {"ftol", c.optimizer.ftol},
                      {"max_line_evaluations", c.optimizer.max_line_evaluations},
                      {"initial_step", c.optimizer.initial_step}};
    j["landscape"] = {{"beta_min", c.landscape.beta_min},     {"beta_max", c.landscape.beta_max},
                      {"beta_steps", c.landscape.beta_steps}, {"gamma_min", c.landscape.gamma_min},
                      {"gamma_max", c.landscape.gamma_max},   {"gamma_steps", c.landscape.gamma_steps},
                      {"instance", c.landscape_instance}};
    j["trace"] = {{"layers", c.trace_layers}, {"budget", c.trace_budget}};
    return j.dump(2) + "\n";
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str());
}

std::vector<BenchmarkInstance> make_instances(const ExperimentConfig &config) {
    std::vector<BenchmarkInstance> out;
    for (std::size_t trips : config.trip_counts) {
        ProblemClass cls = config.problem;
        cls.trips = trips;
        for (std::size_t i = 0; i < config.n_instances; ++i) {
            BenchmarkInstance b;
            b.id = i;
            b.trips = trips;
            b.seed = derive_seed(config.seed, {trips, i});
            b.instance = generate_instance(cls, b.seed);
            out.push_back(std::move(b));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metrics and single runs

SampleMetrics compute_metrics(std::span<const std::size_t> samples, const ProblemModel &model,
                              const EnumerationResult &oracle) {
    if (oracle.total_count != model.reg().total_size()) {
        throw std::invalid_argument("oracle result does not belong to this model");
    }
    if (samples.empty()) {
        throw std::invalid_argument("compute_metrics needs at least one sample");
    }
    SampleMetrics m;
    double sum = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t idx : samples) {
        const Evaluation e = model.evaluate_index(idx);
        sum += e.total_energy;
        lowest = std::min(lowest, e.total_energy);
        if (e.report.feasible()) {
            ++m.feasible;
        }
        if (oracle.is_optimal(idx)) {
            m.success = true;
        }
    }
    m.delta_e_mean = sum / static_cast<double>(samples.size()) - oracle.ground_energy;
    m.delta_e_min = lowest - oracle.ground_energy;
    return m;
}

std::vector<double> initial_parameters(std::uint64_t instance_seed, std::size_t layers, std::size_t run,
                                       std::size_t dim) {
    Rng rng(derive_seed(instance_seed, {1, layers, run}));
    return restart_schedule(dim, 1, rng).front();
}

RunRecord execute_run(const ProblemModel &model, const EnumerationResult &oracle, const RunSpec &spec) {
    if (!oracle.energy_table) {
        throw std::invalid_argument("execute_run needs an oracle result with a retained energy table");
    }
    QaoaCircuit circuit(model.reg_ptr(), oracle.energy_table);
    const bool with_beta2 = circuit.uses_beta2();
    const std::size_t dim = spec.layers * (with_beta2 ? 3 : 2);
    const std::uint64_t run_seed =
        derive_seed(spec.instance_seed, {2, static_cast<std::uint64_t>(model.encoding()), spec.layers, spec.run});
    const std::span<const double> energies = circuit.energies();

    double max_norm_deviation = 0.0;
    std::uint64_t evaluation = 0;
    const Objective objective = [&](std::span<const double> x) {
        const StateVector &state = circuit.run(QaoaParams::unflatten(x, with_beta2));
        max_norm_deviation = std::max(max_norm_deviation, std::abs(state.norm_squared() - 1.0));
        Rng rng(derive_seed(run_seed, {evaluation++}));
        return estimate_cost(state, energies, spec.shots, rng).mean_energy;
    };

    const std::vector<double> x0 = initial_parameters(spec.instance_seed, spec.layers, spec.run, dim);
    const auto t0 = std::chrono::steady_clock::now();
    OptimizationTrace trace = minimize(objective, x0, spec.optimizer);
    const auto t1 = std::chrono::steady_clock::now();
    if (trace.best_params.empty()) {
        throw std::runtime_error("optimization produced no finite objective value");
    }

    const StateVector &final_state = circuit.run(QaoaParams::unflatten(trace.best_params, with_beta2));
    max_norm_deviation = std::max(max_norm_deviation, std::abs(final_state.norm_squared() - 1.0));
    Rng final_rng(derive_seed(run_seed, {~std::uint64_t{0}}));
    const ShotEstimate final_estimate = estimate_cost(final_state, energies, spec.shots, final_rng);

    RunRecord rec;
    rec.instance_id = spec.instance_id;
    rec.trips = model.instance().num_trips();
    rec.encoding = model.encoding();
    rec.layers = spec.layers;
    rec.run = spec.run;
    rec.final_mean_energy = final_estimate.mean_energy;
    rec.metrics = compute_metrics(final_estimate.samples, model, oracle);
    rec.shots = spec.shots;
    rec.evaluations = trace.evaluations_used;
    rec.shots_consumed = static_cast<std::size_t>(evaluation) * spec.shots;
    rec.best_value = trace.best_value;
    rec.stop = trace.reason;
    rec.max_norm_deviation = max_norm_deviation;
    rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (spec.keep_trace) {
        rec.running_best = trace.running_best();
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Aggregation

std::vector<Summary> aggregate(std::span<const RunRecord> records) {
    using Key = std::tuple<EncodingKind, std::size_t, std::size_t>;
    std::map<Key, std::vector<const RunRecord *>> groups;
    for (const RunRecord &r : records) {
        groups[{r.encoding, r.trips, r.layers}].push_back(&r);
    }
    std::vector<Summary> out;
    for (const auto &[key, group] : groups) {
        Summary s;
        std::tie(s.encoding, s.trips, s.layers) = key;
        s.records = group.size();
        std::map<std::size_t, std::vector<const RunRecord *>> by_instance;
        std::vector<double> de_mean;
        std::vector<double> de_min;
        double seconds = 0.0;
        for (const RunRecord *r : group) {
            by_instance[r->instance_id].push_back(r);
            de_mean.push_back(r->metrics.delta_e_mean);
            de_min.push_back(r->metrics.delta_e_min);
            seconds += r->seconds;
        }
        s.instances = by_instance.size();
        std::vector<double> instance_means;
        double r_sum = 0.0;
        double f_sum = 0.0;
        double dispersion = 0.0;
        for (const auto &[id, runs] : by_instance) {
            double x = 0.0;
            double f = 0.0;
            std::vector<double> gaps;
            for (const RunRecord *r : runs) {
                x += r->metrics.success ? 1.0 : 0.0;
                f += static_cast<double>(r->metrics.feasible) / static_cast<double>(r->shots);
                gaps.push_back(r->metrics.delta_e_mean);
            }
            const auto n = static_cast<double>(runs.size());
            r_sum += x / n;
            f_sum += f / n;
            instance_means.push_back(std::accumulate(gaps.begin(), gaps.end(), 0.0) / n);
            dispersion += sample_stddev(gaps);
        }
        const auto ni = static_cast<double>(by_instance.size());
        s.success_probability = r_sum / ni;
        s.feasible_fraction = f_sum / ni;
        s.delta_e_mean = summarize(de_mean);
        s.delta_e_min = summarize(de_min);
        s.instance_delta_e_mean = summarize(instance_means);
        s.run_dispersion = dispersion / ni;
        s.mean_seconds = seconds / static_cast<double>(group.size());
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Landscape and progress traces

double LandscapeResult::mean() const {
    return values.empty() ? 0.0 : std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

LandscapeResult landscape_scan(const ProblemModel &model, std::shared_ptr<const std::vector<double>> energies,
                               const LandscapeGrid &grid, std::size_t shots, std::uint64_t seed) {
    if (grid.beta_steps == 0 || grid.gamma_steps == 0) {
        throw std::invalid_argument("landscape grid needs at least one step per axis");
    }
    QaoaCircuit circuit(model.reg_ptr(), std::move(energies));
    LandscapeResult out;
    out.betas = linspace(grid.beta_min, grid.beta_max, grid.beta_steps);
    out.gammas = linspace(grid.gamma_min, grid.gamma_max, grid.gamma_steps);
    out.values.reserve(out.betas.size() * out.gammas.size());
    for (std::size_t g = 0; g < out.gammas.size(); ++g) {
        for (std::size_t b = 0; b < out.betas.size(); ++b) {
            QaoaParams p;
            p.gamma = {out.gammas[g]};
            p.beta1 = {out.betas[b]};
            const StateVector &state = circuit.run(p);
            Rng rng(derive_seed(seed, {g, b}));
            out.values.push_back(estimate_cost(state, circuit.energies(), shots, rng).mean_energy);
        }
    }
    return out;
}

ProgressCurve progress_trace(std::span<const BenchmarkInstance> instances, EncodingKind enc, std::size_t layers,
                             std::size_t budget, std::size_t shots, std::size_t n_runs, const PowellOptions &optimizer,
                             std::size_t threads) {
    std::vector<ProblemModel> models;
    std::vector<EnumerationResult> oracles;
    EnumerationOptions eo;
    eo.retention = TableRetention::Always;
    for (const BenchmarkInstance &b : instances) {
        models.emplace_back(b.instance, enc);
        oracles.push_back(enumerate(models.back(), eo));
    }
    const std::size_t tasks = instances.size() * n_runs;
    std::vector<std::vector<double>> curves(tasks);
    parallel_for(tasks, threads, [&](std::size_t task) {
        const std::size_t k = task / n_runs;
        RunSpec spec;
        spec.instance_id = instances[k].id;
        spec.layers = layers;
        spec.run = task % n_runs;
        spec.shots = shots;
        spec.optimizer = optimizer;
        spec.optimizer.budget = budget;
        spec.instance_seed = instances[k].seed;
        spec.keep_trace = true;
        curves[task] = execute_run(models[k], oracles[k], spec).running_best;
    });
    ProgressCurve out;
    out.encoding = enc;
    out.layers = layers;
    out.runs = tasks;
    out.mean_best.assign(budget, 0.0);
    for (const std::vector<double> &c : curves) {
        for (std::size_t e = 0; e < budget; ++e) {
            out.mean_best[e] += c[std::min(e, c.size() - 1)];
        }
    }
    for (double &v : out.mean_best) {
        v /= static_cast<double>(tasks);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweep

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &task) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            task(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                try {
                    task(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    workers.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

BenchmarkResult run_benchmark(const ExperimentConfig &config, const ProgressCallback &progress) {
    validate(config);
    const std::vector<BenchmarkInstance> instances = make_instances(config);
    const std::size_t n_enc = config.encodings.size();

    std::vector<ProblemModel> models;
    std::vector<EnumerationResult> oracles;
    BenchmarkResult result;
    EnumerationOptions eo;
    eo.retention = TableRetention::Always;
    for (const BenchmarkInstance &b : instances) {
        for (EncodingKind enc : config.encodings) {
            models.emplace_back(b.instance, enc);
            oracles.push_back(enumerate(models.back(), eo));
            const EnumerationResult &e = oracles.back();
            InstanceStatistics s;
            s.instance_id = b.id;
            s.encoding = enc;
            s.trips = b.trips;
            s.total = e.total_count;
            s.feasible = e.feasible_count;
            s.optimal = e.optimal_set.size();
            s.ground_energy = e.ground_energy;
            s.feasible_fraction = e.feasible_fraction();
            s.optimal_fraction = e.optimal_fraction();
            result.statistics.push_back(s);
        }
    }

    const std::size_t per_model = config.layers.size() * config.n_runs;
    const std::size_t tasks = models.size() * per_model;
    result.records.resize(tasks);
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    parallel_for(tasks, config.threads, [&](std::size_t task) {
        const std::size_t m = task / per_model;
        const std::size_t rest = task % per_model;
        const BenchmarkInstance &b = instances[m / n_enc];
        RunSpec spec;
        spec.instance_id = b.id;
        spec.layers = config.layers[rest / config.n_runs];
        spec.run = rest % config.n_runs;
        spec.shots = config.shots;
        spec.optimizer = config.optimizer;
        spec.optimizer.budget = config.budget;
        spec.instance_seed = b.seed;
        result.records[task] = execute_run(models[m], oracles[m], spec);
        const std::size_t finished = ++done;
        if (progress) {
            std::lock_guard lock(progress_mutex);
            progress(finished, tasks);
        }
    });
    std::stable_sort(result.records.begin(), result.records.end(), [](const RunRecord &a, const RunRecord &b) {
        return std::tie(a.trips, a.instance_id, a.encoding, a.layers, a.run) <
               std::tie(b.trips, b.instance_id, b.encoding, b.layers, b.run);
    });
    result.summaries = aggregate(result.records);
    return result;
}

// ---------------------------------------------------------------------------
// Output

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_runs_csv(std::ostream &out, std::span<const RunRecord> records) {
    out << "trips,instance,encoding,layers,run,shots,evaluations,shots_consumed,stop,best_value,"
           "final_mean_energy,delta_e_mean,delta_e_min,success,feasible_count,max_norm_deviation\n";
    for (const RunRecord &r : records) {
        out << r.trips << ',' << r.instance_id << ',' << to_string(r.encoding) << ',' << r.layers << ',' << r.run
            << ',' << r.shots << ',' << r.evaluations << ',' << r.shots_consumed << ',' << to_string(r.stop) << ','
            << format_real(r.best_value) << ',' << format_real(r.final_mean_energy) << ','
            << format_real(r.metrics.delta_e_mean) << ',' << format_real(r.metrics.delta_e_min) << ','
            << (r.metrics.success ? 1 : 0) << ',' << r.metrics.feasible << ',' << format_real(r.max_norm_deviation)
            << '\n';
    }
}

void write_timing_csv(std::ostream &out, std::span<const RunRecord> records) {
    out << "trips,instance,encoding,layers,run,seconds\n";
    for (const RunRecord &r : records) {
        out << r.trips << ',' << r.instance_id << ',' << to_string(r.encoding) << ',' << r.layers << ',' << r.run
            << ',' << format_real(r.seconds) << '\n';
    }
}

void write_summary_csv(std::ostream &out, std::span<const Summary> summaries) {
    out << "encoding,trips,layers,instances,records,success_probability,feasible_fraction,"
           "delta_e_mean_mean,delta_e_mean_min,delta_e_mean_q1,delta_e_mean_median,delta_e_mean_q3,"
           "delta_e_mean_max,delta_e_min_mean,delta_e_min_min,delta_e_min_q1,delta_e_min_median,"
           "delta_e_min_q3,delta_e_min_max,instance_delta_e_mean_min,instance_delta_e_mean_median,"
           "instance_delta_e_mean_max,run_dispersion\n";
    for (const Summary &s : summaries) {
        out << to_string(s.encoding) << ',' << s.trips << ',' << s.layers << ',' << s.instances << ',' << s.records
            << ',' << format_real(s.success_probability) << ',' << format_real(s.feasible_fraction);
        for (const Distribution *d : {&s.delta_e_mean, &s.delta_e_min}) {
            out << ',' << format_real(d->mean) << ',' << format_real(d->min) << ',' << format_real(d->q1) << ','
                << format_real(d->median) << ',' << format_real(d->q3) << ',' << format_real(d->max);
        }
        out << ',' << format_real(s.instance_delta_e_mean.min) << ',' << format_real(s.instance_delta_e_mean.median)
            << ',' << format_real(s.instance_delta_e_mean.max) << ',' << format_real(s.run_dispersion) << '\n';
    }
}

void write_runtime_summary_csv(std::ostream &out, std::span<const Summary> summaries) {
    out << "encoding,trips,layers,records,mean_seconds\n";
    for (const Summary &s : summaries) {
        out << to_string(s.encoding) << ',' << s.trips << ',' << s.layers << ',' << s.records << ','
            << format_real(s.mean_seconds) << '\n';
    }
}

void write_instance_summary_csv(std::ostream &out, std::span<const RunRecord> records) {
    using Key = std::tuple<EncodingKind, std::size_t, std::size_t, std::size_t>;
    std::map<Key, std::vector<const RunRecord *>> groups;
    for (const RunRecord &r : records) {
        groups[{r.encoding, r.trips, r.layers, r.instance_id}].push_back(&r);
    }
    out << "encoding,trips,layers,instance,runs,success_probability,feasible_fraction,delta_e_mean_mean,"
           "delta_e_mean_std,delta_e_min_mean\n";
    for (const auto &[key, runs] : groups) {
        const auto &[enc, trips, layers, id] = key;
        double x = 0.0;
        double f = 0.0;
        double de_min = 0.0;
        std::vector<double> gaps;
        for (const RunRecord *r : runs) {
            x += r->metrics.success ? 1.0 : 0.0;
            f += static_cast<double>(r->metrics.feasible) / static_cast<double>(r->shots);
            de_min += r->metrics.delta_e_min;
            gaps.push_back(r->metrics.delta_e_mean);
        }
        const auto n = static_cast<double>(runs.size());
        out << to_string(enc) << ',' << trips << ',' << layers << ',' << id << ',' << runs.size() << ','
            << format_real(x / n) << ',' << format_real(f / n) << ','
            << format_real(std::accumulate(gaps.begin(), gaps.end(), 0.0) / n) << ','
            << format_real(sample_stddev(gaps)) << ',' << format_real(de_min / n) << '\n';
    }
}

void write_landscape_csv(std::ostream &out, const LandscapeResult &grid) {
    out << "gamma,beta,cost\n";
    for (std::size_t g = 0; g < grid.gammas.size(); ++g) {
        for (std::size_t b = 0; b < grid.betas.size(); ++b) {
            out << format_real(grid.gammas[g]) << ',' << format_real(grid.betas[b]) << ','
                << format_real(grid.at(g, b)) << '\n';
        }
    }
}

void write_trace_csv(std::ostream &out, std::span<const ProgressCurve> curves) {
    out << "encoding,layers,runs,evaluation,mean_best\n";
    for (const ProgressCurve &c : curves) {
        for (std::size_t e = 0; e < c.mean_best.size(); ++e) {
            out << to_string(c.encoding) << ',' << c.layers << ',' << c.runs << ',' << e + 1 << ','
                << format_real(c.mean_best[e]) << '\n';
        }
    }
}

void write_benchmark(const std::filesystem::path &dir, const ExperimentConfig &config, const BenchmarkResult &result) {
    std::filesystem::create_directories(dir);
    auto emit = [&](const char *name, const auto &writer) {
        const std::filesystem::path path = dir / name;
        std::ofstream out = open_output(path);
        writer(out);
        finish(out, path);
    };
    emit("config.json", [&](std::ostream &o) { o << config_to_json(config); });
    emit("statistics.csv", [&](std::ostream &o) { write_statistics_csv(o, result.statistics); });
    emit("runs.csv", [&](std::ostream &o) { write_runs_csv(o, result.records); });
    emit("summary.csv", [&](std::ostream &o) { write_summary_csv(o, result.summaries); });
    emit("instance_summary.csv", [&](std::ostream &o) { write_instance_summary_csv(o, result.records); });
    emit("timing.csv", [&](std::ostream &o) { write_timing_csv(o, result.records); });
    emit("runtime_summary.csv", [&](std::ostream &o) { write_runtime_summary_csv(o, result.summaries); });
}

}  // namespace quditev
