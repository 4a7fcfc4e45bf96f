#include "doctest.h"

#include <stdexcept>

#include "colldecay/distillation.hpp"
#include "colldecay/measures.hpp"
#include "colldecay/states.hpp"

using namespace colldecay;

TEST_CASE("projection of the stationary Werner state at eta = 2") {
    const auto out = project_to_qubit_subspace(qutrit_stationary_werner(2.0));
    CHECK(out.probability == doctest::Approx(129.0 / 135.0).epsilon(1e-13));
    const auto& m = out.state.matrix();
    CHECK(m(qubit_index(1, 1), qubit_index(1, 1)).real() == doctest::Approx(3.0 / 129.0));
    CHECK(m(qubit_index(0, 0), qubit_index(0, 0)).real() == doctest::Approx(45.0 / 129.0));
    CHECK(singlet_fraction(out.state) == doctest::Approx(81.0 / 129.0));
    CHECK(is_npt(out.state));
}

TEST_CASE("projected states stay NPT across the family") {
    for (double eta : {0.5, 2.0, 10.0, 100.0}) {
        CAPTURE(eta);
        const auto out = project_to_qubit_subspace(qutrit_stationary_werner(eta));
        CHECK(out.probability == doctest::Approx((68.0 * eta - 7.0) / (72.0 * eta - 9.0)).epsilon(1e-13));
        CHECK(is_npt(out.state));
    }
}

TEST_CASE("the antisymmetric state is unchanged by the projection") {
    const auto out = project_to_qubit_subspace(DensityMatrix(ComplexMatrix::outer(qutrit_antisymmetric_a1()), kTwoQutrits));
    CHECK(out.probability == doctest::Approx(1.0));
    CHECK(frobenius_distance(out.state.matrix(), bell_state(BellSign::minus).matrix()) < 1e-15);
}

TEST_CASE("projection error cases") {
    ComplexMatrix far(9, 9);
    far(qutrit_index(3, 3), qutrit_index(3, 3)) = 1.0;
    try {
        project_to_qubit_subspace(DensityMatrix(far, kTwoQutrits));
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "projection annihilates state");
    }
    CHECK_THROWS_AS(project_to_qubit_subspace(maximally_mixed(kTwoQubits)), std::invalid_argument);
}
