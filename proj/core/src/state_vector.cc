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

#include "quditev/state_vector.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace quditev {

StateVector::StateVector(std::shared_ptr<const Register> reg)
    : reg_(std::move(reg)), amplitudes_(reg_->total_size(), Complex(0.0, 0.0)) {}

StateVector StateVector::basis(std::shared_ptr<const Register> reg, std::size_t index) {
    StateVector s(std::move(reg));
    if (index >= s.size()) {
        throw InvalidConfiguration("basis index out of range");
    }
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::uniform(std::shared_ptr<const Register> reg) {
    StateVector s(std::move(reg));
    const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
    std::fill(s.amplitudes_.begin(), s.amplitudes_.end(), Complex(a, 0.0));
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::norm(amplitudes_[k]);
    }
    return p;
}

namespace {

// Products are expanded on (re, im) pairs.
template <std::size_t D>
void apply_fixed(std::span<Complex> amps, std::size_t stride, const ComplexMatrix &u) {
    std::array<double, D * D> mr;
    std::array<double, D * D> mi;
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t c = 0; c < D; ++c) {
            const Complex z = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            mr[r * D + c] = z.real();
            mi[r * D + c] = z.imag();
        }
    }
    const std::size_t block = D * stride;
    double *data = reinterpret_cast<double *>(amps.data());
    std::array<double, D> vr;
    std::array<double, D> vi;
    for (std::size_t base = 0; base < amps.size(); base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            double *p = data + 2 * (base + inner);
            for (std::size_t j = 0; j < D; ++j) {
                vr[j] = p[2 * j * stride];
                vi[j] = p[2 * j * stride + 1];
            }
            for (std::size_t r = 0; r < D; ++r) {
                double re = 0.0;
                double im = 0.0;
                for (std::size_t c = 0; c < D; ++c) {
                    re += mr[r * D + c] * vr[c] - mi[r * D + c] * vi[c];
                    im += mr[r * D + c] * vi[c] + mi[r * D + c] * vr[c];
                }
                p[2 * r * stride] = re;
                p[2 * r * stride + 1] = im;
            }
        }
    }
}

void apply_generic(std::span<Complex> amps, std::size_t dim, std::size_t stride, const ComplexMatrix &u) {
    const std::size_t block = dim * stride;
    std::vector<Complex> v(dim);
    for (std::size_t base = 0; base < amps.size(); base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            Complex *p = amps.data() + base + inner;
            for (std::size_t j = 0; j < dim; ++j) {
                v[j] = p[j * stride];
            }
            for (std::size_t r = 0; r < dim; ++r) {
                double re = 0.0;
                double im = 0.0;
                for (std::size_t c = 0; c < dim; ++c) {
                    const Complex m = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                    re += m.real() * v[c].real() - m.imag() * v[c].imag();
                    im += m.real() * v[c].imag() + m.imag() * v[c].real();
                }
                p[r * stride] = Complex(re, im);
            }
        }
    }
}

}  // namespace

void apply_site_unitary(StateVector &state, std::size_t site, const ComplexMatrix &unitary) {
    const Register &reg = state.reg();
    if (site >= reg.num_sites()) {
        throw DimensionError("site index " + std::to_string(site) + " out of range");
    }
    const std::size_t dim = reg.dimension(site);
    if (static_cast<std::size_t>(unitary.rows()) != dim || static_cast<std::size_t>(unitary.cols()) != dim) {
        throw DimensionError("unitary is " + std::to_string(unitary.rows()) + "x" + std::to_string(unitary.cols()) +
                             ", site " + std::to_string(site) + " has dimension " + std::to_string(dim));
    }
    const ComplexMatrix gram = unitary.adjoint() * unitary;
    const double defect = (gram - ComplexMatrix::Identity(unitary.rows(), unitary.cols())).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw std::invalid_argument("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }

    const std::size_t stride = reg.stride(site);
    std::span<Complex> amps = state.amplitudes();
    switch (dim) {
        case 2: apply_fixed<2>(amps, stride, unitary); break;
        case 3: apply_fixed<3>(amps, stride, unitary); break;
        case 4: apply_fixed<4>(amps, stride, unitary); break;
        case 5: apply_fixed<5>(amps, stride, unitary); break;
        default: apply_generic(amps, dim, stride, unitary); break;
    }
}

void apply_diagonal_phase(StateVector &state, double gamma, std::span<const double> energies) {
    if (energies.size() != state.size()) {
        throw DimensionError("energy table has " + std::to_string(energies.size()) + " entries, state has " +
                             std::to_string(state.size()));
    }
    if (gamma == 0.0) {
        return;
    }
    std::span<Complex> amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double phase = -gamma * energies[k];
        const double c = std::cos(phase);
        const double sn = std::sin(phase);
        amps[k] = Complex(amps[k].real() * c - amps[k].imag() * sn, amps[k].real() * sn + amps[k].imag() * c);
    }
}

ComplexMatrix hermitian_exponential(const ComplexMatrix &hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw DimensionError("hermitian_exponential needs a square matrix");
    }
    if (hamiltonian.rows() > 16) {
        throw DimensionError("hermitian_exponential supports dimension <= 16");
    }
    const double asym = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw NotHermitian("matrix is not Hermitian (defect " + std::to_string(asym) + ")");
    }
    const ComplexMatrix h = 0.5 * (hamiltonian + hamiltonian.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const Eigen::VectorXd &lambda = solver.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        phases(k) = Complex(std::cos(lambda(k)), -std::sin(lambda(k)));
    }
    const ComplexMatrix &v = solver.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

std::vector<std::size_t> born_sample(const StateVector &state, std::size_t shots, Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("born_sample needs at least one shot");
    }
    std::vector<double> cumulative(state.size());
    double total = 0.0;
    const std::span<const Complex> amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        total += std::norm(amps[k]);
        cumulative[k] = total;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw NotNormalized("state norm^2 is " + std::to_string(total));
    }
    std::vector<std::size_t> samples(shots);
    for (std::size_t m = 0; m < shots; ++m) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            // u rounded up to total: take the last outcome with nonzero weight.
            do {
                --it;
            } while (it != cumulative.begin() && *it == *(it - 1));
        }
        samples[m] = static_cast<std::size_t>(it - cumulative.begin());
    }
    return samples;
}

}  // namespace quditev
