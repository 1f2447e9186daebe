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

#ifndef QUDITEV_STATE_VECTOR_H
#define QUDITEV_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "quditev/register.h"
#include "quditev/rng.h"
#include "quditev/site_operators.h"

namespace quditev {

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense amplitude array over the mixed-radix space of a register.
class StateVector {
   public:
    explicit StateVector(std::shared_ptr<const Register> reg);

    /// Computational basis state |index>.
    static StateVector basis(std::shared_ptr<const Register> reg, std::size_t index);
    /// Equal superposition of every basis state.
    static StateVector uniform(std::shared_ptr<const Register> reg);

    const Register &reg() const { return *reg_; }
    const std::shared_ptr<const Register> &reg_ptr() const { return reg_; }
    std::size_t size() const { return amplitudes_.size(); }

    std::span<Complex> amplitudes() { return amplitudes_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex &operator[](std::size_t k) { return amplitudes_[k]; }
    const Complex &operator[](std::size_t k) const { return amplitudes_[k]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

   private:
    std::shared_ptr<const Register> reg_;
    std::vector<Complex> amplitudes_;
};

/// Applies I x ... x U x ... x I with U acting on `site`.
/// Throws DimensionError if U does not match the site, std::invalid_argument
/// if U is not unitary within 1e-10.
void apply_site_unitary(StateVector &state, std::size_t site, const ComplexMatrix &unitary);

/// Multiplies amplitude k by exp(-i gamma energies[k]).
void apply_diagonal_phase(StateVector &state, double gamma, std::span<const double> energies);

/// exp(-iH) for a small Hermitian H (dimension <= 16) by spectral decomposition.
ComplexMatrix hermitian_exponential(const ComplexMatrix &hamiltonian);

/// M independent Born-rule draws, returned as flat basis indices. Inverse CDF
/// over the cumulative probabilities; deterministic for a given rng state.
std::vector<std::size_t> born_sample(const StateVector &state, std::size_t shots, Rng &rng);

}  // namespace quditev

#endif
