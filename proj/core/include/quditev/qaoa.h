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

#ifndef QUDITEV_QAOA_H
#define QUDITEV_QAOA_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "quditev/oracle.h"
#include "quditev/register.h"
#include "quditev/rng.h"
#include "quditev/state_vector.h"

namespace quditev {

/// Variational angles of an L-layer circuit. beta2 is empty in the
/// all-two-level reduction, where the z^2 mixer term is a pure phase offset.
struct QaoaParams {
    std::vector<double> gamma;
    std::vector<double> beta1;
    std::vector<double> beta2;

    std::size_t layers() const { return gamma.size(); }
    bool has_beta2() const { return !beta2.empty(); }

    /// Flattened layout is per layer: (gamma_l, beta1_l[, beta2_l]).
    std::vector<double> flatten() const;
    static QaoaParams unflatten(std::span<const double> flat, bool with_beta2);
    void validate() const;
};

/// 3 per layer, or 2 when every site of `reg` is two-level.
std::size_t parameters_per_layer(const Register &reg);

struct ShotEstimate {
    double mean_energy = 0.0;
    std::vector<std::size_t> samples;
    std::size_t shots = 0;
};

StateVector initial_state(std::shared_ptr<const Register> reg);

/// exp(-i (beta1 x_s + beta2 z_s^2)) for every site s, using the site's own
/// operator family.
std::vector<ComplexMatrix> mixer_unitary_factors(const Register &reg, double beta1, double beta2);

/// Reusable circuit executor for one register and energy table. Caches the
/// per-family site operators; not thread-safe, one per run.
class QaoaCircuit {
   public:
    QaoaCircuit(std::shared_ptr<const Register> reg, std::shared_ptr<const std::vector<double>> energies);

    const Register &reg() const { return *reg_; }
    std::span<const double> energies() const { return *energies_; }
    bool uses_beta2() const { return parameters_per_layer(*reg_) == 3; }

    /// Prod_l [mixer(beta_l) * phase(gamma_l)] |uniform>.
    const StateVector &run(const QaoaParams &params);
    const StateVector &state() const { return state_; }

    void apply_layer(StateVector &state, double gamma, double beta1, double beta2);
    /// exp(-i gamma H_C), evaluated once per distinct energy.
    void apply_phase(StateVector &state, double gamma);
    std::size_t distinct_energies() const { return levels_.size(); }

   private:
    struct Kind {
        std::size_t dimension;
        LadderFamily family;
        auto operator<=>(const Kind &) const = default;
    };

    std::shared_ptr<const Register> reg_;
    std::shared_ptr<const std::vector<double>> energies_;
    std::map<Kind, SiteOperators> operators_;
    std::vector<Kind> site_kind_;
    std::vector<double> levels_;
    std::vector<std::uint32_t> level_of_;
    std::vector<Complex> level_phase_;
    StateVector state_;
};

StateVector run_circuit(std::shared_ptr<const Register> reg, const QaoaParams &params,
                        std::shared_ptr<const std::vector<double>> energies);

/// Mean of energies[z_m] over M Born samples z_m.
ShotEstimate estimate_cost(const StateVector &state, std::span<const double> energies, std::size_t shots, Rng &rng);

/// <psi|H_C|psi> for diagonal H_C.
double exact_cost(const StateVector &state, std::span<const double> energies);

}  // namespace quditev

#endif
