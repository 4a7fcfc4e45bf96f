#pragma once

#include <array>
#include <optional>

#include "colldecay/density.hpp"
#include "colldecay/states.hpp"

namespace colldecay {

// Generic, eigen-based measures. The 2x2-only ones throw
// std::invalid_argument for any other bipartite split.

/// Wootters concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho), which
/// shares its eigenvalues with rho rho~ while staying Hermitian.
double concurrence(const DensityMatrix& rho);

/// 2 * sum |negative eigenvalues of the partial transpose|.
double negativity(const DensityMatrix& rho, Subsystem which = Subsystem::A);

/// T_nm = Tr(rho sigma_n (x) sigma_m).
std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho);

/// Maximal CHSH value 2 sqrt(l1 + l2) over the two largest eigenvalues of T^T T.
double chsh_max(const DensityMatrix& rho);

/// (4/3)(1 - Tr rho^2)
double linear_entropy(const DensityMatrix& rho);

/// <Phi-|rho|Phi->
double singlet_fraction(const DensityMatrix& rho);

/// True iff the smallest eigenvalue of the partial transpose is below -tol.
bool is_npt(const DensityMatrix& rho, double tol = 1e-10);

struct MeasureReport {
    std::optional<double> concurrence;
    double negativity = 0.0;
    std::optional<double> chsh_max;
    std::optional<double> linear_entropy;
    std::optional<double> singlet_fraction;
};

/// Every measure defined for the state's bipartite split; qutrit states only
/// get negativity.
MeasureReport measure(const DensityMatrix& rho);

// Closed forms for the stationary qubit states. They never touch an
// eigensolver, so they act as independent oracles for the generic measures
// above.

/// Case singlet: max[0, (1+3r+(18r-6)(N^2+N)) / (4(3N^2+3N+1))]
/// Case triplet: max[0, (1-r-(6+6r)(N^2+N)) / (4(3N^2+3N+1))]
double analytic_concurrence(WernerCase which, double r, double n_mean);

/// max[0, C_stationary - max(0, (3r-1)/2)]
double concurrence_increment(WernerCase which, double r, double n_mean);

/// Whether a collective reservoir with mean occupation n_mean raises the
/// concurrence of a Werner state whose singlet fraction is f:
///   1 > f > max(1/6, (3N^2+3N)/(6N^2+6N+1))
/// or
///   1/6 >= f > (9N^2+9N+2)/(36N^2+36N+14).
bool enhancement_predicate(double f, double n_mean);

/// 2 sqrt(4|c|^2 + max[4|c|^2, (1-4 p10)^2]) with c the |10><01| coherence.
double analytic_chsh(WernerCase which, double r, double n_mean);

/// Smallest r whose singlet-case stationary state violates CHSH:
/// (2 sqrt2 - 1 + 6 sqrt2 N(N+1)) / (3 + 12 N(N+1)).
double bell_violation_threshold(double n_mean);

/// Singlet-case stationary state is entangled iff r exceeds this value,
/// (6N^2+6N-1)/(18N^2+18N+3).
double entanglement_threshold_singlet(double n_mean);

/// Triplet-case stationary state is entangled iff r is below this value and
/// n_mean < (sqrt15 - 3)/6: (1-6N-6N^2)/(1+6N+6N^2).
double entanglement_bound_triplet(double n_mean);
/// (sqrt15 - 3)/6
double triplet_entanglement_max_occupation();

/// |x| with x = p11 + p00 - sqrt((p11-p00)^2 + 4|c|^2) when x < 0, else 0.
double analytic_negativity(WernerCase which, double r, double n_mean);

/// Negativity of qutrit_stationary_werner(eta) assembled from the negative
/// root of the auxiliary cubic. Throws std::runtime_error if the cubic has
/// no negative root.
double qutrit_negativity_closed_form(double eta);
double qutrit_negativity_closed_form_limit();

/// Real roots of the monic cubic x^3 + b x^2 + c x + d, ascending. Uses the
/// trigonometric Cardano branch when all three roots are real and distinct;
/// near-degenerate or single-real-root cases fall back to bracketing plus
/// bisection.
std::vector<double> real_cubic_roots(double b, double c, double d);

}  // namespace colldecay
