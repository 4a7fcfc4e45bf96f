#include "colldecay/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "colldecay/eigen.hpp"

namespace colldecay {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* what) {
    if (rho.dims() != kTwoQubits) throw std::invalid_argument(std::string(what) + ": requires a two-qubit state");
}

void require_occupation(double n_mean) {
    if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) throw std::invalid_argument("n_mean must be finite and >= 0");
}

double werner_concurrence(double r) { return std::max(0.0, (3.0 * r - 1.0) / 2.0); }

double cubic_value(double b, double c, double d, double x) { return ((x + b) * x + c) * x + d; }

double bisect(double b, double c, double d, double lo, double hi) {
    double flo = cubic_value(b, c, d, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = cubic_value(b, c, d, mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bracketed_cubic_roots(double b, double c, double d) {
    const double bound = 1.0 + std::max({std::abs(b), std::abs(c), std::abs(d)});
    std::vector<double> knots{-bound};
    // f'(x) = 3x^2 + 2bx + c
    const double disc = b * b - 3.0 * c;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        knots.push_back((-b - s) / 3.0);
        knots.push_back((-b + s) / 3.0);
    }
    knots.push_back(bound);

    const double scale = std::max({1.0, std::abs(b), std::abs(c), std::abs(d)});
    std::vector<double> roots;
    auto add = [&](double x) {
        for (double y : roots)
            if (std::abs(x - y) < 1e-10) return;
        roots.push_back(x);
    };
    for (std::size_t k = 1; k + 1 < knots.size(); ++k)
        if (std::abs(cubic_value(b, c, d, knots[k])) < 1e-14 * scale) add(knots[k]);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        const double lo = knots[k], hi = knots[k + 1];
        const double flo = cubic_value(b, c, d, lo), fhi = cubic_value(b, c, d, hi);
        if (flo == 0.0) add(lo);
        if ((flo < 0.0) != (fhi < 0.0) && fhi != 0.0 && flo != 0.0) add(bisect(b, c, d, lo, hi));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double stationary_chsh(const XStateCoefficients& k) {
    const double coh2 = 4.0 * k.coherence * k.coherence;
    const double zz = 1.0 - 4.0 * k.p10;
    return 2.0 * std::sqrt(coh2 + std::max(coh2, zz * zz));
}

double qutrit_negativity_from(double zeta1, double zeta2, double zeta3) {
    const auto roots = real_cubic_roots(-(zeta1 + zeta2), zeta1 * zeta2 - zeta2 * zeta2 - zeta3 * zeta3,
                                        zeta2 * zeta2 * zeta2);
    if (roots.empty() || !(roots.front() < 0.0)) {
        throw std::runtime_error("qutrit_negativity_closed_form: cubic has no negative root");
    }
    const double kappa = roots.front();
    return 2.0 * (std::sqrt(zeta3 * zeta3 + 4.0 * zeta2 * zeta2) - zeta3) + 2.0 * std::abs(kappa);
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
    require_two_qubits(rho, "concurrence");
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    const ComplexMatrix flipped = yy * m.conj() * yy;
    const ComplexMatrix root = spectral_map(m, [](double x) { return std::sqrt(std::max(0.0, x)); });
    const ComplexMatrix product = root * flipped * root;
    auto ev = hermitian_eigenvalues(0.5 * (product + product.dagger()));
    for (auto& x : ev) x = std::sqrt(std::max(0.0, x));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return std::max(0.0, ev[0] - ev[1] - ev[2] - ev[3]);
}

double negativity(const DensityMatrix& rho, Subsystem which) {
    const auto ev = hermitian_eigenvalues(partial_transpose(rho, which));
    double sum = 0.0;
    for (double x : ev)
        if (x < 0.0) sum += -x;
    return 2.0 * sum;
}

std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho) {
    require_two_qubits(rho, "correlation_matrix");
    const std::array<ComplexMatrix, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
    std::array<std::array<double, 3>, 3> t{};
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t m = 0; m < 3; ++m) t[n][m] = trace_of_product(rho.matrix(), kron(sigma[n], sigma[m])).real();
    return t;
}

double chsh_max(const DensityMatrix& rho) {
    const auto t = correlation_matrix(rho);
    ComplexMatrix tt(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
            tt(i, j) = s;
        }
    const auto ev = hermitian_eigenvalues(tt);
    return 2.0 * std::sqrt(std::max(0.0, ev[2] + ev[1]));
}

double linear_entropy(const DensityMatrix& rho) {
    require_two_qubits(rho, "linear_entropy");
    const double purity = std::pow(rho.matrix().frobenius_norm(), 2);
    return 4.0 / 3.0 * (1.0 - purity);
}

double singlet_fraction(const DensityMatrix& rho) {
    require_two_qubits(rho, "singlet_fraction");
    const auto phi = bell_vector(BellSign::minus);
    return inner(phi, matvec(rho.matrix(), phi)).real();
}

bool is_npt(const DensityMatrix& rho, double tol) {
    return hermitian_eigenvalues(partial_transpose(rho, Subsystem::A)).front() < -tol;
}

MeasureReport measure(const DensityMatrix& rho) {
    MeasureReport out;
    out.negativity = negativity(rho);
    if (rho.dims() == kTwoQubits) {
        out.concurrence = concurrence(rho);
        out.chsh_max = chsh_max(rho);
        out.linear_entropy = linear_entropy(rho);
        out.singlet_fraction = singlet_fraction(rho);
    }
    return out;
}

double analytic_concurrence(WernerCase which, double r, double n_mean) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("analytic_concurrence: r must lie in [0, 1]");
    require_occupation(n_mean);
    const double m = n_mean * n_mean + n_mean;
    const double denom = 4.0 * (3.0 * n_mean * n_mean + 3.0 * n_mean + 1.0);
    const double num = which == WernerCase::singlet ? 1.0 + 3.0 * r + (18.0 * r - 6.0) * m
                                                    : 1.0 - r - (6.0 + 6.0 * r) * m;
    return std::max(0.0, num / denom);
}

double concurrence_increment(WernerCase which, double r, double n_mean) {
    return std::max(0.0, analytic_concurrence(which, r, n_mean) - werner_concurrence(r));
}

bool enhancement_predicate(double f, double n_mean) {
    const double n2 = n_mean * n_mean;
    const double upper_branch = (3.0 * n2 + 3.0 * n_mean) / (6.0 * n2 + 6.0 * n_mean + 1.0);
    const double lower_branch = (9.0 * n2 + 9.0 * n_mean + 2.0) / (36.0 * n2 + 36.0 * n_mean + 14.0);
    const bool first = 1.0 > f && f > std::max(1.0 / 6.0, upper_branch);
    const bool second = 1.0 / 6.0 >= f && f > lower_branch;
    return first || second;
}

double analytic_chsh(WernerCase which, double r, double n_mean) {
    return stationary_chsh(stationary_coefficients(which, r, n_mean));
}

double bell_violation_threshold(double n_mean) {
    require_occupation(n_mean);
    const double m = n_mean * (n_mean + 1.0);
    return (2.0 * std::numbers::sqrt2 - 1.0 + 6.0 * std::numbers::sqrt2 * m) / (3.0 + 12.0 * m);
}

double entanglement_threshold_singlet(double n_mean) {
    require_occupation(n_mean);
    const double n2 = n_mean * n_mean;
    return (6.0 * n2 + 6.0 * n_mean - 1.0) / (18.0 * n2 + 18.0 * n_mean + 3.0);
}

double entanglement_bound_triplet(double n_mean) {
    require_occupation(n_mean);
    const double m = 6.0 * n_mean + 6.0 * n_mean * n_mean;
    return (1.0 - m) / (1.0 + m);
}

double triplet_entanglement_max_occupation() { return (std::sqrt(15.0) - 3.0) / 6.0; }

double analytic_negativity(WernerCase which, double r, double n_mean) {
    const auto k = stationary_coefficients(which, r, n_mean);
    const double x = k.p11 + k.p00 - std::sqrt((k.p11 - k.p00) * (k.p11 - k.p00) + 4.0 * k.coherence * k.coherence);
    return 0.5 * std::abs(x) - 0.5 * x;
}

double qutrit_negativity_closed_form(double eta) {
    if (!(eta >= 0.5) || !std::isfinite(eta)) throw std::invalid_argument("eta must be finite and >= 1/2");
    return qutrit_negativity_from((10.0 * eta - 5.0) / (24.0 * eta - 3.0), (2.0 * eta - 1.0) / (72.0 * eta - 9.0),
                                  (4.0 * eta + 1.0) / (16.0 * eta - 2.0));
}

double qutrit_negativity_closed_form_limit() { return qutrit_negativity_from(5.0 / 12.0, 1.0 / 36.0, 1.0 / 4.0); }

std::vector<double> real_cubic_roots(double b, double c, double d) {
    // x = y - b/3 gives y^3 + p y + q = 0
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    if (disc > 1e-12 && p < 0.0) {
        const double amp = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * amp), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        std::vector<double> roots(3);
        for (int k = 0; k < 3; ++k) roots[k] = amp * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - b / 3.0;
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    return bracketed_cubic_roots(b, c, d);
}

}  // namespace colldecay
