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

#include "quditev/qaoa.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quditev {

std::vector<double> QaoaParams::flatten() const {
    validate();
    std::vector<double> flat;
    flat.reserve(layers() * (has_beta2() ? 3 : 2));
    for (std::size_t l = 0; l < layers(); ++l) {
        flat.push_back(gamma[l]);
        flat.push_back(beta1[l]);
        if (has_beta2()) {
            flat.push_back(beta2[l]);
        }
    }
    return flat;
}

QaoaParams QaoaParams::unflatten(std::span<const double> flat, bool with_beta2) {
    const std::size_t per_layer = with_beta2 ? 3 : 2;
    if (flat.size() % per_layer != 0) {
        throw std::invalid_argument("parameter vector length " + std::to_string(flat.size()) +
                                    " is not a multiple of " + std::to_string(per_layer));
    }
    QaoaParams p;
    for (std::size_t k = 0; k < flat.size(); k += per_layer) {
        p.gamma.push_back(flat[k]);
        p.beta1.push_back(flat[k + 1]);
        if (with_beta2) {
            p.beta2.push_back(flat[k + 2]);
        }
    }
    return p;
}

void QaoaParams::validate() const {
    if (beta1.size() != gamma.size() || (!beta2.empty() && beta2.size() != gamma.size())) {
        throw std::invalid_argument("QAOA parameter arrays must all have length L");
    }
}

std::size_t parameters_per_layer(const Register &reg) { return reg.all_two_level() ? 2 : 3; }

StateVector initial_state(std::shared_ptr<const Register> reg) { return StateVector::uniform(std::move(reg)); }

namespace {

ComplexMatrix mixer_factor(const SiteOperators &ops, double beta1, double beta2) {
    return hermitian_exponential(beta1 * ops.x + beta2 * ops.z_squared);
}

}  // namespace

std::vector<ComplexMatrix> mixer_unitary_factors(const Register &reg, double beta1, double beta2) {
    std::vector<ComplexMatrix> factors;
    factors.reserve(reg.num_sites());
    for (const Site &s : reg.sites()) {
        auto same = std::find_if(reg.sites().begin(), reg.sites().end(), [&](const Site &o) {
            return o.dimension == s.dimension && o.family == s.family;
        });
        const auto first = static_cast<std::size_t>(same - reg.sites().begin());
        if (first < factors.size()) {
            factors.push_back(factors[first]);
        } else {
            factors.push_back(mixer_factor(build_ladder_operators(s.dimension, s.family), beta1, beta2));
        }
    }
    return factors;
}

QaoaCircuit::QaoaCircuit(std::shared_ptr<const Register> reg, std::shared_ptr<const std::vector<double>> energies)
    : reg_(std::move(reg)), energies_(std::move(energies)), state_(reg_) {
    if (!energies_ || energies_->size() != reg_->total_size()) {
        throw DimensionError("energy table does not match the register size");
    }
    for (const Site &s : reg_->sites()) {
        const Kind kind{s.dimension, s.family};
        site_kind_.push_back(kind);
        if (!operators_.contains(kind)) {
            operators_.emplace(kind, build_ladder_operators(s.dimension, s.family));
        }
    }
    levels_ = *energies_;
    std::sort(levels_.begin(), levels_.end());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
    level_of_.resize(energies_->size());
    for (std::size_t k = 0; k < energies_->size(); ++k) {
        const auto it = std::lower_bound(levels_.begin(), levels_.end(), (*energies_)[k]);
        level_of_[k] = static_cast<std::uint32_t>(it - levels_.begin());
    }
    level_phase_.resize(levels_.size());
}

void QaoaCircuit::apply_phase(StateVector &state, double gamma) {
    if (&state.reg() != reg_.get() && !(state.reg() == *reg_)) {
        throw DimensionError("state register does not match the circuit");
    }
    if (gamma == 0.0) {
        return;
    }
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        const double phase = -gamma * levels_[j];
        level_phase_[j] = Complex(std::cos(phase), std::sin(phase));
    }
    std::span<Complex> amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const Complex w = level_phase_[level_of_[k]];
        const Complex a = amps[k];
        amps[k] = Complex(a.real() * w.real() - a.imag() * w.imag(), a.real() * w.imag() + a.imag() * w.real());
    }
}

void QaoaCircuit::apply_layer(StateVector &state, double gamma, double beta1, double beta2) {
    apply_phase(state, gamma);
    if (beta1 == 0.0 && beta2 == 0.0) {
        return;
    }
    std::map<Kind, ComplexMatrix> factors;
    for (const auto &[kind, ops] : operators_) {
        factors.emplace(kind, mixer_factor(ops, beta1, beta2));
    }
    for (std::size_t k = 0; k < site_kind_.size(); ++k) {
        apply_site_unitary(state, k, factors.at(site_kind_[k]));
    }
}

const StateVector &QaoaCircuit::run(const QaoaParams &params) {
    params.validate();
    const double a = 1.0 / std::sqrt(static_cast<double>(state_.size()));
    std::span<Complex> amps = state_.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex(a, 0.0));
    for (std::size_t l = 0; l < params.layers(); ++l) {
        apply_layer(state_, params.gamma[l], params.beta1[l], params.has_beta2() ? params.beta2[l] : 0.0);
    }
    return state_;
}

StateVector run_circuit(std::shared_ptr<const Register> reg, const QaoaParams &params,
                        std::shared_ptr<const std::vector<double>> energies) {
    QaoaCircuit circuit(std::move(reg), std::move(energies));
    return circuit.run(params);
}

ShotEstimate estimate_cost(const StateVector &state, std::span<const double> energies, std::size_t shots, Rng &rng) {
    if (energies.size() != state.size()) {
        throw DimensionError("energy table does not match the state size");
    }
    ShotEstimate est;
    est.shots = shots;
    est.samples = born_sample(state, shots, rng);
    double sum = 0.0;
    for (std::size_t idx : est.samples) {
        sum += energies[idx];
    }
    est.mean_energy = sum / static_cast<double>(shots);
    return est;
}

double exact_cost(const StateVector &state, std::span<const double> energies) {
    if (energies.size() != state.size()) {
        throw DimensionError("energy table does not match the state size");
    }
    double sum = 0.0;
    const std::span<const Complex> amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        sum += std::norm(amps[k]) * energies[k];
    }
    return sum;
}

}  // namespace quditev
