#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "colldecay/measures.hpp"
#include "colldecay/random_states.hpp"
#include "colldecay/states.hpp"

using namespace colldecay;
using std::numbers::sqrt2;

namespace {
constexpr auto S = WernerCase::singlet;
constexpr auto T = WernerCase::triplet;
const double kMixedNegativity = (std::sqrt(97.0) - 8.0) / 27.0;
}  // namespace

TEST_CASE("concurrence of reference states") {
    CHECK(concurrence(maximally_mixed(kTwoQubits)) == doctest::Approx(0.0));
    CHECK(concurrence(bell_state(BellSign::minus)) == doctest::Approx(1.0));
    CHECK(concurrence(bell_state(BellSign::plus)) == doctest::Approx(1.0));
    CHECK(concurrence(werner_qubit(0.8, S)) == doctest::Approx(0.7));
    CHECK(concurrence(werner_qubit(0.3, S)) == 0.0);
    CHECK_THROWS_AS(concurrence(maximally_mixed(kTwoQutrits)), std::invalid_argument);
}

TEST_CASE("measures on stationary states agree with the numerical oracle") {
    // Oracle values: matrix exponential of the generator, then direct
    // evaluation of each measure (independent implementation).
    struct Row {
        WernerCase c;
        double r, n, conc, neg, chsh, entropy;
    };
    const Row rows[] = {
        {S, 0.8, 0.5, 0.746153846153956, 0.705208329421306, 2.306255963254944, 0.353846153845841},
        {T, 0.3, 0.1, 0.0, 0.0, 1.049030359700577, 0.535112781954898},
        {S, 0.5, 0.5, 0.365384615384707, 0.297367161989614, 1.522999221017459, 0.711538461538282},
        {S, 0.0, 1.0, 0.0, 0.0, 0.159719141250041, 0.928571428571276},
        {S, 0.9, 2.0, 0.853947368420823, 0.850216070911985, 2.549306026908753, 0.189736842105820},
    };
    for (const auto& row : rows) {
        CAPTURE(row.r);
        CAPTURE(row.n);
        const auto rho = stationary_qubit(row.c, row.r, row.n);
        CHECK(std::abs(concurrence(rho) - row.conc) < 1e-9);
        CHECK(std::abs(negativity(rho) - row.neg) < 1e-9);
        CHECK(std::abs(chsh_max(rho) - row.chsh) < 1e-9);
        CHECK(std::abs(linear_entropy(rho) - row.entropy) < 1e-9);
        CHECK(std::abs(analytic_concurrence(row.c, row.r, row.n) - row.conc) < 1e-9);
        CHECK(std::abs(analytic_negativity(row.c, row.r, row.n) - row.neg) < 1e-9);
        CHECK(std::abs(analytic_chsh(row.c, row.r, row.n) - row.chsh) < 1e-9);
    }
}

TEST_CASE("analytic concurrence values") {
    CHECK(analytic_concurrence(S, 0.0, 0.0) == doctest::Approx(0.25));
    for (double n : {0.0, 0.3, 2.0, 10.0}) CHECK(analytic_concurrence(S, 1.0, n) == doctest::Approx(1.0));
    // N = 0.2 is outside the triplet entanglement window.
    CHECK(analytic_concurrence(T, 0.0, 0.2) == 0.0);
    CHECK(0.2 > triplet_entanglement_max_occupation());
    CHECK_THROWS_AS(analytic_concurrence(S, 1.5, 0.0), std::invalid_argument);
}

TEST_CASE("entanglement thresholds") {
    CHECK(triplet_entanglement_max_occupation() == doctest::Approx((std::sqrt(15.0) - 3.0) / 6.0));
    CHECK(entanglement_bound_triplet(0.0) == doctest::Approx(1.0));
    const double n = 0.1;
    const double bound = entanglement_bound_triplet(n);
    CHECK(concurrence(stationary_qubit(T, bound - 1e-4, n)) > 0.0);
    CHECK(concurrence(stationary_qubit(T, bound + 1e-4, n)) == 0.0);
    CHECK(analytic_negativity(T, 0.0, 1.0) == 0.0);
}

TEST_CASE("enhancement predicate") {
    CHECK(enhancement_predicate(0.6, 5.0));
    CHECK_FALSE(enhancement_predicate(1.0, 0.0));
    CHECK_FALSE(enhancement_predicate(1.0, 3.0));
    CHECK(enhancement_predicate(1.0 / 6.0, 0.0));
    CHECK_FALSE(enhancement_predicate(0.1, 0.0));
}

TEST_CASE("concurrence increment") {
    CHECK(concurrence_increment(S, 0.0, 0.0) == doctest::Approx(0.25));
    CHECK(concurrence_increment(S, 1.0, 0.0) == doctest::Approx(0.0));
    CHECK(concurrence_increment(T, 1.0, 0.0) == doctest::Approx(0.0));
    CHECK(concurrence_increment(S, 0.2, 50.0) == 0.0);
}

TEST_CASE("CHSH values") {
    CHECK(chsh_max(bell_state(BellSign::minus)) == doctest::Approx(2.0 * sqrt2));
    CHECK(chsh_max(maximally_mixed(kTwoQubits)) == doctest::Approx(0.0).epsilon(1e-15));
    for (double r : {0.2, 0.5, 0.9}) CHECK(chsh_max(werner_qubit(r, S)) == doctest::Approx(2.0 * sqrt2 * r));
    CHECK(analytic_chsh(S, 1.0, 0.0) == doctest::Approx(2.0 * sqrt2));
    CHECK(analytic_chsh(S, 0.65, 0.0) > 2.0);
    CHECK(bell_violation_threshold(0.0) == doctest::Approx((2.0 * sqrt2 - 1.0) / 3.0).epsilon(1e-14));
    CHECK(bell_violation_threshold(1e5) == doctest::Approx(sqrt2 / 2.0).epsilon(1e-9));
    CHECK(bell_violation_threshold(1.0) > bell_violation_threshold(0.5));
}

TEST_CASE("linear entropy and singlet fraction") {
    CHECK(linear_entropy(bell_state(BellSign::plus)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(linear_entropy(maximally_mixed(kTwoQubits)) == doctest::Approx(1.0));
    for (double r : {0.6, 0.8}) {
        const double c = (1.0 + 3.0 * r) / 4.0;
        CHECK(linear_entropy(stationary_qubit(S, r, 0.0)) == doctest::Approx(8.0 / 3.0 * c * (1.0 - c)));
    }
    CHECK(singlet_fraction(bell_state(BellSign::minus)) == doctest::Approx(1.0));
    CHECK(singlet_fraction(bell_state(BellSign::plus)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(linear_entropy(maximally_mixed(kTwoQutrits)), std::invalid_argument);
}

TEST_CASE("negativity") {
    CHECK(negativity(bell_state(BellSign::minus)) == doctest::Approx(1.0));
    CHECK(negativity(maximally_mixed(kTwoQutrits)) == 0.0);
    CHECK(std::abs(negativity(qutrit_stationary_mixed()) - kMixedNegativity) < 1e-12);
    CHECK(analytic_negativity(S, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(analytic_negativity(S, 0.5, 0.5) - negativity(stationary_qubit(S, 0.5, 0.5))) < 1e-10);
    // Both subsystems give the same spectrum.
    std::mt19937_64 rng(21);
    const auto rho = random_density(rng, kTwoQutrits, 2);
    CHECK(negativity(rho, Subsystem::A) == doctest::Approx(negativity(rho, Subsystem::B)));
}

TEST_CASE("NPT test") {
    CHECK_FALSE(is_npt(maximally_mixed(kTwoQubits)));
    CHECK_FALSE(is_npt(werner_qubit(0.2, S)));
    CHECK(is_npt(werner_qubit(0.4, S)));
}

TEST_CASE("qutrit closed-form negativity") {
    CHECK(qutrit_negativity_closed_form(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    // Oracle: partial transpose of the relaxed state from the 81x81 generator.
    CHECK(std::abs(qutrit_negativity_closed_form(2.0) - 0.328516577316835) < 1e-9);
    CHECK(std::abs(qutrit_negativity_closed_form(10.0) - 0.225884784107488) < 1e-9);
    const double limit = qutrit_negativity_closed_form_limit();
    CHECK(limit > 0.19);
    CHECK(limit < 0.22);
    CHECK(std::abs(qutrit_negativity_closed_form(1e8) - limit) < 1e-7);
    CHECK_THROWS_AS(qutrit_negativity_closed_form(0.2), std::invalid_argument);
}

TEST_CASE("cubic roots") {
    // (x-1)(x-2)(x-3)
    auto roots = real_cubic_roots(-6.0, 11.0, -6.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(1.0));
    CHECK(roots[1] == doctest::Approx(2.0));
    CHECK(roots[2] == doctest::Approx(3.0));
    // (x-1)^2 (x+2): double root
    roots = real_cubic_roots(0.0, -3.0, 2.0);
    CHECK(roots.front() == doctest::Approx(-2.0));
    CHECK(roots.back() == doctest::Approx(1.0).epsilon(1e-6));
    // x^3 + x + 1: single real root
    roots = real_cubic_roots(0.0, 1.0, 1.0);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(-0.6823278038280193));
    // x^3: triple root
    roots = real_cubic_roots(0.0, 0.0, 0.0);
    CHECK(std::abs(roots.front()) < 1e-6);
}

TEST_CASE("measure report") {
    const auto q = measure(stationary_qubit(S, 0.7, 0.3));
    CHECK(q.concurrence.has_value());
    CHECK(q.chsh_max.has_value());
    CHECK(q.singlet_fraction.has_value());
    CHECK(*q.singlet_fraction == doctest::Approx(0.775));
    const auto t = measure(qutrit_stationary_mixed());
    CHECK_FALSE(t.concurrence.has_value());
    CHECK_FALSE(t.linear_entropy.has_value());
    CHECK(t.negativity == doctest::Approx(kMixedNegativity));
}

TEST_CASE("random-state bounds") {
    std::mt19937_64 rng(1234);
    for (int k = 0; k < 200; ++k) {
        const auto rho = random_density(rng, kTwoQubits, 1 + k % 4);
        const double c = concurrence(rho);
        CHECK(chsh_max(rho) <= 2.0 * sqrt2 + 1e-12);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
        CHECK(linear_entropy(rho) >= -1e-12);
        CHECK((c > 1e-9) == (negativity(rho) > 1e-9));
    }
}
