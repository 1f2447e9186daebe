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

// Independent reference implementations used only by the tests.

#ifndef QUDITEV_TESTS_TEST_ORACLES_H
#define QUDITEV_TESTS_TEST_ORACLES_H

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "quditev/problem.h"
#include "quditev/qaoa.h"
#include "quditev/register.h"

namespace quditev::testing {

/// One EV, two steps, one trip at t = 0 drawing 1 unit, no energy deficit.
inline ProblemInstance instance_a() {
    ProblemInstance p;
    p.n_ev = 1;
    p.horizon = 2;
    p.levels = 3;
    p.mode = ChargingMode::Bidirectional;
    p.trips = {Trip{0, 0, 1.0}};
    p.prices = {1.0, 2.0};
    p.delta_t = 1.0;
    p.e0 = {5.0};
    p.e_min = {5.0};
    p.e_cap = {100.0};
    p.p_min = -10.0;
    p.p_max = 10.0;
    p.lambda = 3.0;
    p.alpha = 10.0;
    return p;
}

/// Full-space matrix of `op` acting on `site`, built as a Kronecker chain
/// with site 0 leftmost.
inline Eigen::MatrixXcd embed(const Register &reg, std::size_t site, const Eigen::MatrixXcd &op) {
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t k = 0; k < reg.num_sites(); ++k) {
        const auto d = static_cast<Eigen::Index>(reg.dimension(k));
        const Eigen::MatrixXcd factor = k == site ? op : Eigen::MatrixXcd::Identity(d, d);
        const Eigen::MatrixXcd next = Eigen::kroneckerProduct(full, factor).eval();
        full = next;
    }
    return full;
}

/// exp(-iH) by scaling and squaring a truncated Taylor series.
inline Eigen::MatrixXcd taylor_exponential(const Eigen::MatrixXcd &h) {
    const std::complex<double> minus_i(0.0, -1.0);
    const double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::ldexp(1.0, squarings) > 0.25) {
        ++squarings;
    }
    const Eigen::MatrixXcd a = minus_i * h / std::ldexp(1.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * a / static_cast<double>(k)).eval();
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = (sum * sum).eval();
    }
    return sum;
}

/// Dense full-space circuit: prod_l [ (prod_s embed(exp(...))) diag(exp(-i g E)) ] |+>.
inline Eigen::VectorXcd dense_circuit(const Register &reg, const QaoaParams &params, const std::vector<double> &energies) {
    const auto n = static_cast<Eigen::Index>(reg.total_size());
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::size_t l = 0; l < params.layers(); ++l) {
        Eigen::VectorXcd phase(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            const double a = -params.gamma[l] * energies[static_cast<std::size_t>(k)];
            phase(k) = std::complex<double>(std::cos(a), std::sin(a));
        }
        Eigen::MatrixXcd layer = phase.asDiagonal();
        const double b2 = params.has_beta2() ? params.beta2[l] : 0.0;
        for (std::size_t s = 0; s < reg.num_sites(); ++s) {
            const SiteOperators ops = build_ladder_operators(reg.dimension(s), reg.site(s).family);
            const Eigen::MatrixXcd u = taylor_exponential(params.beta1[l] * ops.x + b2 * ops.z_squared);
            layer = (embed(reg, s, u) * layer).eval();
        }
        psi = (layer * psi).eval();
    }
    return psi;
}

/// Penalized cost written out term by term from the constraint list.
struct ReferenceCost {
    double base = 0.0;
    double violation = 0.0;
    double total = 0.0;
};

inline ReferenceCost reference_cost(const ProblemInstance &p, EncodingKind enc, const std::vector<std::size_t> &digits) {
    const std::size_t N = p.n_ev;
    const std::size_t T = p.horizon;
    const std::size_t R = p.trips.size();
    auto l = [&](std::size_t n, std::size_t t) {
        const double d = static_cast<double>(digits[n * T + t]);
        return p.mode == ChargingMode::Bidirectional ? d - (static_cast<double>(p.levels) - 1.0) / 2.0 : d;
    };
    auto r = [&](std::size_t n, std::size_t i) -> double {
        if (enc == EncodingKind::BinaryTrips) {
            return digits[N * T + n * R + i] == 1 ? 1.0 : 0.0;
        }
        return digits[N * T + i] == n + 1 ? 1.0 : 0.0;
    };
    ReferenceCost c;
    for (std::size_t t = 0; t < T; ++t) {
        for (std::size_t n = 0; n < N; ++n) {
            c.base += p.delta_t * p.prices[t] * l(n, t);
        }
    }
    for (std::size_t i = 0; i < R; ++i) {
        double served = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            served += r(n, i);
        }
        if (served == 0.0) {
            c.base += p.lambda;
        }
    }
    double v = 0.0;
    auto overlap = [&](std::size_t i, std::size_t j) {
        return p.trips[i].start <= p.trips[j].end && p.trips[j].start <= p.trips[i].end;
    };
    if (enc == EncodingKind::BinaryTrips) {
        for (std::size_t i = 0; i < R; ++i) {
            for (std::size_t n = 0; n < N; ++n) {
                for (std::size_t m = n + 1; m < N; ++m) {
                    v += r(n, i) * r(m, i);
                }
            }
        }
        for (std::size_t n = 0; n < N; ++n) {
            for (std::size_t i = 0; i < R; ++i) {
                for (std::size_t j = i + 1; j < R; ++j) {
                    if (overlap(i, j)) {
                        v += r(n, i) * r(n, j);
                    }
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < R; ++i) {
            for (std::size_t j = i + 1; j < R; ++j) {
                const std::size_t qi = digits[N * T + i];
                if (overlap(i, j) && qi != 0 && qi == digits[N * T + j]) {
                    v += 1.0;
                }
            }
        }
    }
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t i = 0; i < R; ++i) {
            for (std::size_t t = 0; t < T; ++t) {
                if (p.trips[i].covers(t)) {
                    v += std::abs(r(n, i) * l(n, t));
                }
            }
        }
        for (std::size_t t = 0; t < T; ++t) {
            double soc = p.e0[n];
            for (std::size_t k = 0; k < t; ++k) {
                soc += p.delta_t * l(n, k);
            }
            for (std::size_t i = 0; i < R; ++i) {
                if (p.trips[i].start <= t) {
                    soc -= p.trips[i].energy * r(n, i);
                }
            }
            v += std::max(0.0, -soc) + std::max(0.0, soc - p.e_cap[n]);
        }
        double final_soc = p.e0[n];
        for (std::size_t t = 0; t < T; ++t) {
            final_soc += p.delta_t * l(n, t);
        }
        for (std::size_t i = 0; i < R; ++i) {
            final_soc -= p.trips[i].energy * r(n, i);
        }
        v += std::max(0.0, p.e_min[n] - final_soc);
    }
    for (std::size_t t = 0; t < T; ++t) {
        double power = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            power += l(n, t);
        }
        v += std::max(0.0, p.p_min - power) + std::max(0.0, power - p.p_max);
    }
    c.violation = v;
    c.total = c.base + p.alpha * v;
    return c;
}

}  // namespace quditev::testing

#endif
