#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "colldecay/eigen.hpp"
#include "colldecay/measures.hpp"
#include "colldecay/states.hpp"

using namespace colldecay;

namespace {
const std::size_t k11 = qubit_index(1, 1), k10 = qubit_index(1, 0), k01 = qubit_index(0, 1), k00 = qubit_index(0, 0);

double weight(const DensityMatrix& rho, const std::vector<Complex>& v) {
    return inner(v, matvec(rho.matrix(), v)).real();
}
}  // namespace

TEST_CASE("basis ordering") {
    CHECK(k11 == 0);
    CHECK(k10 == 1);
    CHECK(k01 == 2);
    CHECK(k00 == 3);
    CHECK(qutrit_index(1, 1) == 0);
    CHECK(qutrit_index(2, 3) == 5);
    CHECK(qutrit_index(3, 3) == 8);
}

TEST_CASE("Bell states") {
    const auto minus = bell_state(BellSign::minus).matrix();
    CHECK(minus(k10, k10).real() == doctest::Approx(0.5));
    CHECK(minus(k01, k01).real() == doctest::Approx(0.5));
    CHECK(minus(k10, k01).real() == doctest::Approx(-0.5));
    CHECK(minus(k01, k10).real() == doctest::Approx(-0.5));
    const auto plus = bell_state(BellSign::plus).matrix();
    CHECK(plus(k10, k01).real() == doctest::Approx(0.5));
    CHECK(concurrence(bell_state(BellSign::minus)) == doctest::Approx(1.0));
}

TEST_CASE("qubit Werner states") {
    CHECK(frobenius_distance(werner_qubit(0.0, WernerCase::singlet).matrix(), ComplexMatrix::identity(4) * 0.25) <
          1e-15);
    CHECK(frobenius_distance(werner_qubit(1.0, WernerCase::singlet).matrix(), bell_state(BellSign::minus).matrix()) <
          1e-15);
    CHECK(singlet_fraction(werner_qubit(0.5, WernerCase::singlet)) == doctest::Approx(5.0 / 8.0));
    CHECK(singlet_fraction(werner_qubit(0.5, WernerCase::triplet)) == doctest::Approx(1.0 / 8.0));
    CHECK_THROWS_AS(werner_qubit(1.1, WernerCase::singlet), std::invalid_argument);
    CHECK_THROWS_AS(werner_qubit(-0.1, WernerCase::triplet), std::invalid_argument);
}

TEST_CASE("qutrit Werner family") {
    CHECK(is_npt(qutrit_werner(2.0)));
    CHECK(is_npt(qutrit_werner(1e3)));
    CHECK_THROWS_AS(qutrit_werner(0.49), std::invalid_argument);
    CHECK_THROWS_AS(qutrit_werner(INFINITY), std::invalid_argument);
    // At eta = 1/2 the state is the normalized antisymmetric projector.
    const auto rho = qutrit_werner(0.5);
    CHECK(weight(rho, qutrit_antisymmetric_a1()) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("maximally mixed states") {
    CHECK(maximally_mixed(kTwoQutrits).matrix()(4, 4).real() == doctest::Approx(1.0 / 9.0));
    CHECK(maximally_mixed({2, 3}).dim() == 6);
    CHECK_THROWS_AS(maximally_mixed({4, 2}), std::invalid_argument);
}

TEST_CASE("stationary singlet case at r=1, N=0 is the singlet") {
    const auto c = stationary_coefficients(WernerCase::singlet, 1.0, 0.0);
    CHECK(c.p11 == doctest::Approx(0.0));
    CHECK(c.p10 == doctest::Approx(0.5));
    CHECK(c.p01 == doctest::Approx(0.5));
    CHECK(c.coherence == doctest::Approx(-0.5));
    CHECK(c.p00 == doctest::Approx(0.0));
    CHECK(frobenius_distance(stationary_qubit(WernerCase::singlet, 1.0, 0.0).matrix(),
                             bell_state(BellSign::minus).matrix()) < 1e-15);
}

TEST_CASE("stationary coefficients match the numerical oracle") {
    // Oracle: matrix exponential of the 16x16 generator applied for t = 400.
    const auto c = stationary_coefficients(WernerCase::singlet, 0.8, 0.5);
    CHECK(c.p11 == doctest::Approx(0.011538461538461).epsilon(1e-10));
    CHECK(c.p10 == doctest::Approx(0.442307692307692).epsilon(1e-10));
    CHECK(c.p00 == doctest::Approx(0.103846153846154).epsilon(1e-10));
    CHECK(c.coherence == doctest::Approx(-0.407692307692308).epsilon(1e-10));

    const auto t = stationary_coefficients(WernerCase::triplet, 0.3, 0.1);
    CHECK(t.p11 == doctest::Approx(0.006203007518797).epsilon(1e-10));
    CHECK(t.p10 == doctest::Approx(0.121616541353381).epsilon(1e-10));
    CHECK(t.p00 == doctest::Approx(0.750563909774432).epsilon(1e-10));
    CHECK(t.coherence == doctest::Approx(-0.053383458646614).epsilon(1e-10));
}

TEST_CASE("stationary triplet case keeps a zero singlet fraction at r=1") {
    CHECK(std::abs(singlet_fraction(stationary_qubit(WernerCase::triplet, 1.0, 0.0))) < 1e-15);
}

TEST_CASE("infinite temperature leaves the singlet-case Werner state unchanged") {
    for (double r : {0.2, 0.7})
        CHECK(frobenius_distance(stationary_qubit(WernerCase::singlet, r, 1e6).matrix(),
                                 werner_qubit(r, WernerCase::singlet).matrix()) < 1e-5);
}

TEST_CASE("infinite temperature spreads the triplet-case weight evenly over the triplet") {
    const auto singlet = bell_state(BellSign::minus).matrix();
    const auto triplet = ComplexMatrix::identity(4) - singlet;
    for (double r : {0.2, 0.7}) {
        const auto expected = singlet * ((1.0 - r) / 4.0) + triplet * ((3.0 + r) / 12.0);
        CHECK(frobenius_distance(stationary_qubit(WernerCase::triplet, r, 1e6).matrix(), expected) < 1e-5);
    }
}

TEST_CASE("stationary qubit states reject bad parameters") {
    CHECK_THROWS_AS(stationary_qubit(WernerCase::singlet, 0.5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(stationary_qubit(WernerCase::singlet, 2.0, 0.1), std::invalid_argument);
}

TEST_CASE("qutrit stationary mixed state") {
    const auto rho = qutrit_stationary_mixed();
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(5.0 / 9.0));
    CHECK(weight(rho, qutrit_antisymmetric_a1()) == doctest::Approx(1.0 / 3.0));
    CHECK(weight(rho, qutrit_symmetric_s1()) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("qutrit stationary Werner states") {
    const auto pure = qutrit_stationary_werner(0.5);
    CHECK(frobenius_distance(pure.matrix(), ComplexMatrix::outer(qutrit_antisymmetric_a1())) < 1e-15);

    const auto two = qutrit_stationary_werner(2.0);
    CHECK(two.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0));
    CHECK(weight(two, qutrit_symmetric_s1()) == doctest::Approx(1.0 / 15.0));
    CHECK(weight(two, qutrit_antisymmetric_a1()) == doctest::Approx(3.0 / 5.0));

    CHECK(frobenius_distance(qutrit_stationary_werner(1e9).matrix(), qutrit_stationary_werner_limit().matrix()) <
          1e-8);
    CHECK_THROWS_AS(qutrit_stationary_werner(0.4), std::invalid_argument);
}

TEST_CASE("StationarySpec materializes the matching constructor") {
    CHECK(StationarySpec::qubit(WernerCase::triplet, 0.4, 0.2).materialize().matrix() ==
          stationary_qubit(WernerCase::triplet, 0.4, 0.2).matrix());
    CHECK(StationarySpec::qutrit_mixed().dims() == kTwoQutrits);
    CHECK(StationarySpec::qubit(WernerCase::singlet, 0.1, 0.0).dims() == kTwoQubits);
    CHECK(StationarySpec::qutrit_werner(3.0).materialize().matrix() == qutrit_stationary_werner(3.0).matrix());
    CHECK(StationarySpec::qutrit_werner_limit().materialize().matrix() ==
          qutrit_stationary_werner_limit().matrix());
    CHECK_THROWS_AS(StationarySpec::qutrit_werner(0.1), std::invalid_argument);
}
