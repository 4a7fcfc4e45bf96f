#include "colldecay/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace colldecay {

namespace {

void require_fraction(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in [0, 1], got " + std::to_string(r));
}

void require_occupation(double n_mean) {
    if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) {
        throw std::invalid_argument("n_mean must be finite and >= 0, got " + std::to_string(n_mean));
    }
}

void require_eta(double eta) {
    if (!(eta >= 0.5) || !std::isfinite(eta)) {
        throw std::invalid_argument("eta must be finite and >= 1/2, got " + std::to_string(eta));
    }
}

// sum_k w_k |v_k><v_k| on two qutrits.
DensityMatrix qutrit_mixture(double w11, double ws1, double wa1) {
    std::vector<Complex> e11(9);
    e11[qutrit_index(1, 1)] = 1.0;
    ComplexMatrix m = w11 * ComplexMatrix::outer(e11);
    m += ws1 * ComplexMatrix::outer(qutrit_symmetric_s1());
    m += wa1 * ComplexMatrix::outer(qutrit_antisymmetric_a1());
    return DensityMatrix(std::move(m), kTwoQutrits);
}

}  // namespace

std::vector<Complex> bell_vector(BellSign sign) {
    const double h = std::sqrt(0.5);
    std::vector<Complex> v(4);
    v[qubit_index(1, 0)] = h;
    v[qubit_index(0, 1)] = sign == BellSign::plus ? h : -h;
    return v;
}

DensityMatrix bell_state(BellSign sign) {
    return DensityMatrix(ComplexMatrix::outer(bell_vector(sign)), kTwoQubits);
}

DensityMatrix werner_qubit(double r, WernerCase which) {
    require_fraction(r);
    const auto bell = bell_vector(which == WernerCase::singlet ? BellSign::minus : BellSign::plus);
    ComplexMatrix m = r * ComplexMatrix::outer(bell);
    m += (1.0 - r) / 4.0 * ComplexMatrix::identity(4);
    return DensityMatrix(std::move(m), kTwoQubits);
}

double werner_singlet_fraction(double r, WernerCase which) {
    require_fraction(r);
    return which == WernerCase::singlet ? (1.0 + 3.0 * r) / 4.0 : (1.0 - r) / 4.0;
}

DensityMatrix qutrit_werner(double eta) {
    require_eta(eta);
    ComplexMatrix m = eta * ComplexMatrix::identity(9);
    const double swap_weight = (eta + 1.0) / 3.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m(qutrit_index(i, j), qutrit_index(j, i)) -= swap_weight;
    m *= 1.0 / (8.0 * eta - 1.0);
    return DensityMatrix(std::move(m), kTwoQutrits);
}

DensityMatrix maximally_mixed(BipartiteDims dims) {
    const auto ok = [](std::size_t d) { return d == 2 || d == 3; };
    if (!ok(dims.a) || !ok(dims.b)) throw std::invalid_argument("maximally_mixed: local dimensions must be 2 or 3");
    const std::size_t n = dims.total();
    return DensityMatrix(ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n)), dims);
}

std::vector<Complex> qutrit_antisymmetric_a1() {
    const double h = std::sqrt(0.5);
    std::vector<Complex> v(9);
    v[qutrit_index(1, 2)] = h;
    v[qutrit_index(2, 1)] = -h;
    return v;
}

std::vector<Complex> qutrit_symmetric_s1() {
    const double t = 1.0 / std::sqrt(3.0);
    std::vector<Complex> v(9);
    v[qutrit_index(3, 1)] = t;
    v[qutrit_index(1, 3)] = t;
    v[qutrit_index(2, 2)] = -t;
    return v;
}

ComplexMatrix XStateCoefficients::to_matrix() const {
    ComplexMatrix m(4, 4);
    m(qubit_index(1, 1), qubit_index(1, 1)) = p11;
    m(qubit_index(1, 0), qubit_index(1, 0)) = p10;
    m(qubit_index(0, 1), qubit_index(0, 1)) = p01;
    m(qubit_index(0, 0), qubit_index(0, 0)) = p00;
    m(qubit_index(1, 0), qubit_index(0, 1)) = coherence;
    m(qubit_index(0, 1), qubit_index(1, 0)) = coherence;
    return m;
}

double thermal_factor(double n_mean) { return 1.0 + 3.0 * n_mean * (n_mean + 1.0); }

XStateCoefficients stationary_coefficients(WernerCase which, double r, double n_mean) {
    require_fraction(r);
    require_occupation(n_mean);
    const double L = thermal_factor(n_mean);
    const double n2 = n_mean * n_mean;
    XStateCoefficients c;
    if (which == WernerCase::singlet) {
        c.p11 = (3.0 - 3.0 * r) * n2 / (4.0 * L);
        c.p10 = (r - 1.0 + (2.0 + 2.0 * r) * L) / (8.0 * L);
        c.coherence = (r - 1.0 - 4.0 * r * L) / (8.0 * L);
    } else {
        c.p11 = (3.0 + r) * n2 / (4.0 * L);
        c.p10 = (-r - 3.0 + (6.0 - 2.0 * r) * L) / (24.0 * L);
        c.coherence = (-r - 3.0 + 4.0 * r * L) / (24.0 * L);
    }
    c.p01 = c.p10;
    c.p00 = 1.0 - c.p11 - c.p10 - c.p01;
    return c;
}

DensityMatrix stationary_qubit(WernerCase which, double r, double n_mean) {
    return DensityMatrix(stationary_coefficients(which, r, n_mean).to_matrix(), kTwoQubits);
}

DensityMatrix qutrit_stationary_mixed() {
    // 5/9 |11><11| + (1/6)(|12>-|21>)(h.c.) + (1/27)(|31>+|13>-|22>)(h.c.),
    // written in terms of the normalized |A1>, |S1>.
    return qutrit_mixture(5.0 / 9.0, 3.0 / 27.0, 2.0 / 6.0);
}

DensityMatrix qutrit_stationary_werner(double eta) {
    require_eta(eta);
    const double norm = 24.0 * eta - 3.0;
    return qutrit_mixture((10.0 * eta - 5.0) / norm, (2.0 * eta - 1.0) / norm, (12.0 * eta + 3.0) / norm);
}

DensityMatrix qutrit_stationary_werner_limit() {
    return qutrit_mixture(10.0 / 24.0, 2.0 / 24.0, 12.0 / 24.0);
}

StationarySpec StationarySpec::qubit(WernerCase which, double r, double n_mean) {
    require_fraction(r);
    require_occupation(n_mean);
    return StationarySpec(Qubit{which, r, n_mean});
}

StationarySpec StationarySpec::qutrit_werner(double eta) {
    require_eta(eta);
    return StationarySpec(QutritWerner{eta});
}

BipartiteDims StationarySpec::dims() const noexcept {
    return std::holds_alternative<Qubit>(kind_) ? kTwoQubits : kTwoQutrits;
}

DensityMatrix StationarySpec::materialize() const {
    struct Visitor {
        DensityMatrix operator()(const Qubit& q) const { return stationary_qubit(q.which, q.r, q.n_mean); }
        DensityMatrix operator()(const QutritMixed&) const { return qutrit_stationary_mixed(); }
        DensityMatrix operator()(const QutritWerner& w) const { return qutrit_stationary_werner(w.eta); }
        DensityMatrix operator()(const QutritWernerLimit&) const { return qutrit_stationary_werner_limit(); }
    };
    return std::visit(Visitor{}, kind_);
}

}  // namespace colldecay
