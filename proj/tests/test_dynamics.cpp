#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "colldecay/dynamics.hpp"
#include "colldecay/measures.hpp"
#include "colldecay/states.hpp"

using namespace colldecay;

namespace {
DensityMatrix basis_state(std::size_t k) {
    ComplexMatrix m(4, 4);
    m(k, k) = 1.0;
    return DensityMatrix(m, kTwoQubits);
}
}  // namespace

TEST_CASE("model construction") {
    CHECK_THROWS_AS(CollectiveModel(4, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CollectiveModel::qubits(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CollectiveModel::qubits(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(CollectiveModel(3, 1.0, 0.5), std::invalid_argument);

    const auto m = CollectiveModel::qubits(2.0, 1.0);
    CHECK(m.emission_rate() == doctest::Approx(2.0));
    CHECK(m.absorption_rate() == doctest::Approx(1.0));
    CHECK(m.default_dt() == doctest::Approx(0.00125));
    CHECK(m.j_plus() == m.j_minus().dagger());
}

TEST_CASE("qutrit lowering operator") {
    const auto l = site_lowering(3);
    CHECK(l(0, 1).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(l(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(l(0, 2)) == 0.0);
}

TEST_CASE("dark states") {
    for (double n : {0.0, 0.5, 3.0})
        CHECK(lindblad_rhs(CollectiveModel::qubits(1.0, n), bell_state(BellSign::minus)).frobenius_norm() < 1e-15);
    CHECK(lindblad_rhs(CollectiveModel::qubits(1.0, 0.0), basis_state(qubit_index(0, 0))).frobenius_norm() == 0.0);
}

TEST_CASE("decay of the doubly excited state at zero temperature") {
    const auto d = lindblad_rhs(CollectiveModel::qubits(1.0, 0.0), basis_state(qubit_index(1, 1)));
    CHECK(d(0, 0).real() == doctest::Approx(-2.0));
    CHECK(std::abs(d.trace()) < 1e-15);
    CHECK(hermiticity_defect(d) == 0.0);
}

TEST_CASE("rhs rejects a state of the wrong size") {
    CHECK_THROWS_AS(lindblad_rhs(CollectiveModel::qutrits(1.0), bell_state(BellSign::plus)), std::invalid_argument);
}

TEST_CASE("closed-form stationary states are fixed points") {
    for (auto c : {WernerCase::singlet, WernerCase::triplet})
        for (double r : {0.0, 0.3, 1.0})
            for (double n : {0.0, 0.7, 2.5})
                CHECK(stationarity_residual(CollectiveModel::qubits(1.0, n), stationary_qubit(c, r, n)) < 1e-13);
    CHECK(stationarity_residual(CollectiveModel::qutrits(1.0), qutrit_stationary_mixed()) < 1e-13);
    CHECK(stationarity_residual(CollectiveModel::qutrits(1.0), qutrit_stationary_werner(4.0)) < 1e-13);
}

TEST_CASE("relaxation reaches the closed forms") {
    struct Case {
        WernerCase c;
        double r, n;
    };
    for (const auto& k : {Case{WernerCase::singlet, 0.8, 0.5}, Case{WernerCase::triplet, 0.3, 0.1},
                          Case{WernerCase::singlet, 0.0, 0.0}}) {
        const auto out = relax_to_stationary(CollectiveModel::qubits(1.0, k.n), werner_qubit(k.r, k.c));
        CHECK(frobenius_distance(out.state.matrix(), stationary_qubit(k.c, k.r, k.n).matrix()) < 1e-8);
        CHECK(out.residual < 1e-10);
    }
    const auto q = relax_to_stationary(CollectiveModel::qutrits(1.0), qutrit_werner(2.0));
    CHECK(frobenius_distance(q.state.matrix(), qutrit_stationary_werner(2.0).matrix()) < 1e-8);
}

TEST_CASE("maximally mixed input at t = 50") {
    IntegratorConfig cfg;
    cfg.t_max = 50.0;
    const auto traj = evolve(CollectiveModel::qubits(1.0, 0.0), maximally_mixed(kTwoQubits), cfg);
    CHECK(traj.samples.back().t == doctest::Approx(50.0));
    CHECK(frobenius_distance(traj.samples.back().rho.matrix(),
                             stationary_qubit(WernerCase::singlet, 0.0, 0.0).matrix()) < 1e-8);
    CHECK(traj.max_correction < 1e-12);
}

TEST_CASE("rate scaling: doubling gamma halves the relaxation time") {
    const auto slow = relax_to_stationary(CollectiveModel::qubits(1.0, 0.5), werner_qubit(0.4, WernerCase::singlet));
    const auto fast = relax_to_stationary(CollectiveModel::qubits(2.0, 0.5), werner_qubit(0.4, WernerCase::singlet));
    CHECK(frobenius_distance(slow.state.matrix(), fast.state.matrix()) < 1e-8);
    CHECK(fast.t_converged < slow.t_converged);
}

TEST_CASE("sampling and stopping") {
    IntegratorConfig cfg;
    cfg.dt = 0.01;
    cfg.t_max = 1.0;
    cfg.check_interval = 10;
    const auto traj = evolve(CollectiveModel::qubits(1.0, 0.0), werner_qubit(0.5, WernerCase::triplet), cfg);
    CHECK(traj.steps == 100);
    CHECK(traj.samples.size() == 11);
    CHECK(traj.samples.front().t == 0.0);
    CHECK_FALSE(traj.converged);
}

TEST_CASE("a dark initial state converges immediately and stays put") {
    IntegratorConfig cfg;
    cfg.t_max = 5.0;
    const auto traj = evolve(CollectiveModel::qubits(1.0, 3.0), bell_state(BellSign::minus), cfg);
    for (const auto& s : traj.samples)
        CHECK(frobenius_distance(s.rho.matrix(), bell_state(BellSign::minus).matrix()) < 1e-14);
}

TEST_CASE("relaxation that cannot finish in time throws") {
    IntegratorConfig cfg;
    cfg.t_max = 0.5;
    CHECK_THROWS_AS(relax_to_stationary(CollectiveModel::qubits(1.0, 1.0), maximally_mixed(kTwoQubits), cfg),
                    std::runtime_error);
}

TEST_CASE("an unstable step size is reported") {
    IntegratorConfig cfg;
    cfg.dt = 5.0;
    cfg.t_max = 100.0;
    CHECK_THROWS_AS(evolve(CollectiveModel::qubits(1.0, 2.0), werner_qubit(0.2, WernerCase::singlet), cfg),
                    std::runtime_error);
}
