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

#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "quditev/generator.h"
#include "quditev/oracle.h"
#include "quditev/qaoa.h"
#include "test_oracles.h"

namespace quditev {
namespace {

using Eigen::MatrixXcd;

struct Fixture {
    ProblemModel model;
    EnumerationResult oracle;
    std::shared_ptr<const std::vector<double>> energies;

    Fixture(const ProblemInstance &p, EncodingKind enc)
        : model(p, enc), oracle(enumerate(model, {.retention = TableRetention::Always})),
          energies(oracle.energy_table) {}
};

/// Two EVs, two steps, one trip: sizes 324 (binary) and 243 (integer).
ProblemInstance small_instance() {
    ProblemClass cls = ProblemClass::bidirectional_benchmark();
    cls.n_ev = 2;
    cls.trips = 1;
    return generate_instance(cls, 31);
}

QaoaParams random_params(std::size_t layers, bool with_beta2, Rng &rng) {
    QaoaParams p;
    for (std::size_t l = 0; l < layers; ++l) {
        p.gamma.push_back(rng.uniform(0, 2 * std::numbers::pi));
        p.beta1.push_back(rng.uniform(0, 2 * std::numbers::pi));
        if (with_beta2) {
            p.beta2.push_back(rng.uniform(0, 2 * std::numbers::pi));
        }
    }
    return p;
}

TEST(QaoaParams, FlattenLayout) {
    QaoaParams p{{1, 2}, {3, 4}, {5, 6}};
    EXPECT_EQ(p.flatten(), (std::vector<double>{1, 3, 5, 2, 4, 6}));
    const QaoaParams q = QaoaParams::unflatten(p.flatten(), true);
    EXPECT_EQ(q.gamma, p.gamma);
    EXPECT_EQ(q.beta2, p.beta2);
    QaoaParams two{{1, 2}, {3, 4}, {}};
    EXPECT_EQ(two.flatten(), (std::vector<double>{1, 3, 2, 4}));
    EXPECT_THROW(QaoaParams::unflatten(std::vector<double>{1, 2, 3, 4}, true), std::invalid_argument);
    QaoaParams bad{{1, 2}, {3}, {}};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(QaoaParams, CountRule) {
    const ProblemInstance bi = generate_instance(ProblemClass::bidirectional_benchmark(), 1);
    EXPECT_EQ(parameters_per_layer(build_register(bi, EncodingKind::BinaryTrips)), 3u);
    EXPECT_EQ(parameters_per_layer(build_register(bi, EncodingKind::IntegerTrips)), 3u);
    for (std::size_t r = 2; r <= 4; ++r) {
        const ProblemInstance uni = generate_instance(ProblemClass::unidirectional_benchmark(r), r);
        EXPECT_EQ(parameters_per_layer(build_register(uni, EncodingKind::BinaryTrips)), 2u);
        EXPECT_EQ(parameters_per_layer(build_register(uni, EncodingKind::IntegerTrips)), 3u);
    }
}

TEST(InitialState, UniformAmplitudes) {
    const ProblemModel m(generate_instance(ProblemClass::unidirectional_benchmark(2), 1), EncodingKind::IntegerTrips);
    std::vector<Site> sites{Site::trip_binary(0, 0), Site::trip_binary(1, 0)};
    const auto reg = std::make_shared<const Register>(sites);
    const StateVector s = initial_state(reg);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(s[k], Complex(0.5, 0.0));
    }
    const StateVector t = initial_state(m.reg_ptr());
    EXPECT_NEAR(t.norm_squared(), 1.0, 1e-12);
}

TEST(Mixer, ZeroAnglesGiveIdentity) {
    const Register reg = build_register(generate_instance(ProblemClass::bidirectional_benchmark(), 1),
                                        EncodingKind::IntegerTrips);
    for (const MatrixXcd &u : mixer_unitary_factors(reg, 0.0, 0.0)) {
        EXPECT_LT((u - MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Mixer, TwoLevelIsXRotation) {
    const std::vector<Site> sites{Site::trip_binary(0, 0), Site::charging(2, false, 0, 0)};
    const Register reg(sites);
    for (double b : {0.3, 1.0, 2.5, -4.0}) {
        const std::vector<MatrixXcd> f = mixer_unitary_factors(reg, b, 0.0);
        MatrixXcd rx(2, 2);
        rx << std::cos(b / 2), Complex(0, -std::sin(b / 2)), Complex(0, -std::sin(b / 2)), std::cos(b / 2);
        for (const MatrixXcd &u : f) {
            EXPECT_LT((u - rx).cwiseAbs().maxCoeff(), 1e-14);
        }
    }
}

TEST(Mixer, MatchesTaylorOracle) {
    const Register reg = build_register(generate_instance(ProblemClass::bidirectional_benchmark(), 1),
                                        EncodingKind::IntegerTrips);
    const std::vector<MatrixXcd> f = mixer_unitary_factors(reg, 0.83, -1.7);
    ASSERT_EQ(f.size(), reg.num_sites());
    for (std::size_t s = 0; s < reg.num_sites(); ++s) {
        const SiteOperators ops = build_ladder_operators(reg.dimension(s), reg.site(s).family);
        EXPECT_LT((f[s] - testing::taylor_exponential(0.83 * ops.x - 1.7 * ops.z_squared)).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((f[s].adjoint() * f[s] - MatrixXcd::Identity(f[s].rows(), f[s].cols())).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Mixer, SiteFactorsCommute) {
    const Fixture fx(small_instance(), EncodingKind::IntegerTrips);
    const std::vector<MatrixXcd> f = mixer_unitary_factors(fx.model.reg(), 1.1, 0.4);
    Rng rng(8);
    StateVector a(fx.model.reg_ptr());
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    StateVector b = a;
    for (std::size_t s = 0; s < f.size(); ++s) {
        apply_site_unitary(a, s, f[s]);
    }
    for (std::size_t s = f.size(); s-- > 0;) {
        apply_site_unitary(b, s, f[s]);
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        ASSERT_LT(std::abs(a[k] - b[k]), 1e-12);
    }
}

TEST(Circuit, ZeroLayersIsUniform) {
    const Fixture fx(testing::instance_a(), EncodingKind::IntegerTrips);
    const StateVector s = run_circuit(fx.model.reg_ptr(), QaoaParams{}, fx.energies);
    for (std::size_t k = 0; k < s.size(); ++k) {
        EXPECT_NEAR(std::abs(s[k] - 1.0 / std::sqrt(18.0)), 0.0, 1e-15);
    }
}

TEST(Circuit, MatchesDenseOracle) {
    Rng rng(2);
    for (EncodingKind enc : {EncodingKind::BinaryTrips, EncodingKind::IntegerTrips}) {
        for (const ProblemInstance &p : {testing::instance_a(), small_instance()}) {
            const Fixture fx(p, enc);
            ASSERT_LE(fx.model.reg().total_size(), 512u);
            for (std::size_t layers = 1; layers <= 3; ++layers) {
                const QaoaParams params = random_params(layers, true, rng);
                const StateVector s = run_circuit(fx.model.reg_ptr(), params, fx.energies);
                const Eigen::VectorXcd ref = testing::dense_circuit(fx.model.reg(), params, *fx.energies);
                double err = 0.0;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    err = std::max(err, std::abs(s[k] - ref(static_cast<Eigen::Index>(k))));
                }
                EXPECT_LE(err, 1e-9);
                EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
            }
        }
    }
}

TEST(Circuit, ReusedCircuitMatchesFreshRuns) {
    const Fixture fx(small_instance(), EncodingKind::BinaryTrips);
    QaoaCircuit circuit(fx.model.reg_ptr(), fx.energies);
    Rng rng(4);
    for (int rep = 0; rep < 5; ++rep) {
        const QaoaParams params = random_params(2, true, rng);
        const StateVector fresh = run_circuit(fx.model.reg_ptr(), params, fx.energies);
        const StateVector &reused = circuit.run(params);
        for (std::size_t k = 0; k < fresh.size(); ++k) {
            ASSERT_EQ(fresh[k], reused[k]);
        }
    }
    EXPECT_LE(circuit.distinct_energies(), fx.energies->size());
}

TEST(Circuit, LookupPhaseMatchesDirectPhase) {
    const Fixture fx(small_instance(), EncodingKind::IntegerTrips);
    QaoaCircuit circuit(fx.model.reg_ptr(), fx.energies);
    StateVector a = StateVector::uniform(fx.model.reg_ptr());
    StateVector b = a;
    circuit.apply_phase(a, 0.731);
    apply_diagonal_phase(b, 0.731, *fx.energies);
    for (std::size_t k = 0; k < a.size(); ++k) {
        ASSERT_LT(std::abs(a[k] - b[k]), 1e-15);
    }
}

// Without the cost phase, an all-qubit register keeps uniform magnitudes.
TEST(Circuit, ZeroGammaQubitRegisterStaysUniform) {
    const Fixture fx(generate_instance(ProblemClass::unidirectional_benchmark(2), 3), EncodingKind::BinaryTrips);
    ASSERT_TRUE(fx.model.reg().all_two_level());
    QaoaParams params{{0.0, 0.0}, {0.7, 2.9}, {}};
    const std::vector<double> p = run_circuit(fx.model.reg_ptr(), params, fx.energies).probabilities();
    for (double v : p) {
        EXPECT_NEAR(v, 1.0 / 1024.0, 1e-12);
    }
}

// With gamma = 0 the output is a product state; for d >= 3 the spin-x
// rotation does not fix the uniform vector, so the marginals are not uniform.
TEST(Circuit, ZeroGammaQuditRegisterIsProductOfSiteMarginals) {
    const Fixture fx(small_instance(), EncodingKind::IntegerTrips);
    const Register &reg = fx.model.reg();
    const double b1 = 0.9;
    const double b2 = 0.0;
    QaoaParams params{{0.0}, {b1}, {b2}};
    const std::vector<double> p = run_circuit(fx.model.reg_ptr(), params, fx.energies).probabilities();
    const std::vector<MatrixXcd> f = mixer_unitary_factors(reg, b1, b2);
    std::vector<Eigen::VectorXd> marginals;
    bool any_non_uniform = false;
    for (std::size_t s = 0; s < reg.num_sites(); ++s) {
        const auto d = static_cast<Eigen::Index>(reg.dimension(s));
        const Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
        const Eigen::VectorXd m = (f[s] * plus).cwiseAbs2();
        any_non_uniform |= (m.array() - 1.0 / static_cast<double>(d)).abs().maxCoeff() > 1e-3;
        marginals.push_back(m);
    }
    EXPECT_TRUE(any_non_uniform);
    for (std::size_t k = 0; k < p.size(); ++k) {
        double expected = 1.0;
        for (std::size_t s = 0; s < reg.num_sites(); ++s) {
            expected *= marginals[s](static_cast<Eigen::Index>(reg.digit(k, s)));
        }
        ASSERT_NEAR(p[k], expected, 1e-14);
    }
}

TEST(Circuit, TwoPiPeriodicityOnQubitRegisters) {
    const Fixture fx(generate_instance(ProblemClass::unidirectional_benchmark(2), 9), EncodingKind::BinaryTrips);
    const std::vector<MatrixXcd> f0 = mixer_unitary_factors(fx.model.reg(), 0.4, 0.0);
    const std::vector<MatrixXcd> f1 = mixer_unitary_factors(fx.model.reg(), 0.4 + 2 * std::numbers::pi, 0.0);
    for (std::size_t s = 0; s < f0.size(); ++s) {
        EXPECT_LT((f0[s] + f1[s]).cwiseAbs().maxCoeff(), 1e-12);
    }
    const QaoaParams a{{0.3, 1.2}, {0.4, 2.0}, {}};
    const QaoaParams b{{0.3, 1.2}, {0.4 + 2 * std::numbers::pi, 2.0 - 2 * std::numbers::pi}, {}};
    const std::vector<double> pa = run_circuit(fx.model.reg_ptr(), a, fx.energies).probabilities();
    const std::vector<double> pb = run_circuit(fx.model.reg_ptr(), b, fx.energies).probabilities();
    for (std::size_t k = 0; k < pa.size(); ++k) {
        ASSERT_NEAR(pa[k], pb[k], 1e-12);
    }
}

TEST(Cost, DiagonalPhaseInvisibleToExactCost) {
    const Fixture fx(small_instance(), EncodingKind::BinaryTrips);
    Rng rng(6);
    StateVector s = run_circuit(fx.model.reg_ptr(), random_params(2, true, rng), fx.energies);
    const double before = exact_cost(s, *fx.energies);
    for (double g : {0.1, 1.0, 7.3}) {
        apply_diagonal_phase(s, g, *fx.energies);
        EXPECT_NEAR(exact_cost(s, *fx.energies), before, 1e-10);
    }
}

TEST(Cost, UniformAndBasisStates) {
    const Fixture fx(small_instance(), EncodingKind::IntegerTrips);
    const std::vector<double> &e = *fx.energies;
    const double mean = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
    const StateVector u = initial_state(fx.model.reg_ptr());
    EXPECT_NEAR(exact_cost(u, e), mean, 1e-10);
    QaoaParams zero{{0.0}, {0.0}, {0.0}};
    EXPECT_NEAR(exact_cost(run_circuit(fx.model.reg_ptr(), zero, fx.energies), e), mean, 1e-10);
    Rng rng(1);
    for (std::size_t k : {std::size_t{0}, std::size_t{17}, e.size() - 1}) {
        const StateVector b = StateVector::basis(fx.model.reg_ptr(), k);
        EXPECT_EQ(exact_cost(b, e), e[k]);
        const ShotEstimate est = estimate_cost(b, e, 7, rng);
        EXPECT_DOUBLE_EQ(est.mean_energy, e[k]);
        EXPECT_EQ(est.samples.size(), 7u);
    }
}

TEST(Cost, ShotEstimateConvergesToExact) {
    Rng param_rng(10);
    for (EncodingKind enc : {EncodingKind::BinaryTrips, EncodingKind::IntegerTrips}) {
        const Fixture fx(small_instance(), enc);
        const StateVector s = run_circuit(fx.model.reg_ptr(), random_params(2, true, param_rng), fx.energies);
        const std::vector<double> &e = *fx.energies;
        const double mu = exact_cost(s, e);
        double var = 0.0;
        const std::vector<double> p = s.probabilities();
        for (std::size_t k = 0; k < e.size(); ++k) {
            var += p[k] * (e[k] - mu) * (e[k] - mu);
        }
        Rng rng(55);
        const std::size_t m = 65536;
        const ShotEstimate est = estimate_cost(s, e, m, rng);
        EXPECT_LE(std::abs(est.mean_energy - mu), 3.0 * std::sqrt(var / static_cast<double>(m)));
        double sum = 0.0;
        for (std::size_t idx : est.samples) {
            sum += e[idx];
        }
        EXPECT_DOUBLE_EQ(est.mean_energy, sum / static_cast<double>(m));
    }
}

TEST(Cost, RejectsMismatchedTables) {
    const Fixture fx(testing::instance_a(), EncodingKind::IntegerTrips);
    const StateVector s = initial_state(fx.model.reg_ptr());
    Rng rng(1);
    const std::vector<double> wrong(5, 0.0);
    EXPECT_THROW(exact_cost(s, wrong), DimensionError);
    EXPECT_THROW(estimate_cost(s, wrong, 4, rng), DimensionError);
    EXPECT_THROW(QaoaCircuit(fx.model.reg_ptr(), std::make_shared<const std::vector<double>>(wrong)), DimensionError);
}

}  // namespace
}  // namespace quditev
