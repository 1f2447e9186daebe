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

#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "quditev/harness.h"

namespace {

using namespace quditev;

struct Fixture {
    ProblemModel model;
    EnumerationResult oracle;
};

const Fixture &fixture(EncodingKind enc) {
    static const ProblemInstance p = generate_instance(ProblemClass::bidirectional_benchmark(), 1);
    static const Fixture bin{ProblemModel(p, EncodingKind::BinaryTrips),
                             enumerate(ProblemModel(p, EncodingKind::BinaryTrips), {.retention = TableRetention::Always})};
    static const Fixture intg{ProblemModel(p, EncodingKind::IntegerTrips),
                              enumerate(ProblemModel(p, EncodingKind::IntegerTrips), {.retention = TableRetention::Always})};
    return enc == EncodingKind::BinaryTrips ? bin : intg;
}

EncodingKind encoding_arg(const benchmark::State &state) {
    return state.range(0) == 0 ? EncodingKind::BinaryTrips : EncodingKind::IntegerTrips;
}

void BM_Layer(benchmark::State &state) {
    const Fixture &f = fixture(encoding_arg(state));
    QaoaCircuit circuit(f.model.reg_ptr(), f.oracle.energy_table);
    StateVector s = initial_state(f.model.reg_ptr());
    for (auto _ : state) {
        circuit.apply_layer(s, 0.3, 0.7, 0.2);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_Layer)->Arg(0)->Arg(1);

void BM_Phase(benchmark::State &state) {
    const Fixture &f = fixture(encoding_arg(state));
    QaoaCircuit circuit(f.model.reg_ptr(), f.oracle.energy_table);
    StateVector s = initial_state(f.model.reg_ptr());
    for (auto _ : state) {
        circuit.apply_phase(s, 0.3);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_Phase)->Arg(0)->Arg(1);

void BM_Sample256(benchmark::State &state) {
    const Fixture &f = fixture(encoding_arg(state));
    const StateVector s = run_circuit(f.model.reg_ptr(), QaoaParams::unflatten(std::vector<double>{0.3, 0.7, 0.2}, true),
                                      f.oracle.energy_table);
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_cost(s, *f.oracle.energy_table, 256, rng).mean_energy);
    }
}
BENCHMARK(BM_Sample256)->Arg(0)->Arg(1);

void BM_Enumerate(benchmark::State &state) {
    const Fixture &f = fixture(encoding_arg(state));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate(f.model, {.retention = TableRetention::Never}).ground_energy);
    }
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
