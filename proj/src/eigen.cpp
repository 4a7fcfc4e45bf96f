#include "colldecay/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace colldecay {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(k, p), y = a(k, q);
        a(k, p) = c * x + uqp * y;
        a(k, q) = upq * x + uqq * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(p, k), y = a(q, k);
        a(p, k) = c * x + std::conj(uqp) * y;
        a(q, k) = std::conj(upq) * x + std::conj(uqq) * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = v(k, p), y = v(k, q);
        v(k, p) = c * x + uqp * y;
        v(k, q) = upq * x + uqq * y;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eigs(const ComplexMatrix& h, const JacobiOptions& opts) {
    if (!h.is_square()) throw std::invalid_argument("not Hermitian: matrix not square");
    const double scale = h.frobenius_norm();
    if (!(hermiticity_defect(h) <= opts.hermiticity_tol * std::max(1.0, scale))) {
        throw std::invalid_argument("not Hermitian");
    }

    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double target = 1e-14 * scale;
    bool converged = off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged) throw std::runtime_error("eigs failed");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const JacobiOptions& opts) {
    return hermitian_eigs(h, opts).values;
}

ComplexMatrix spectral_map(const ComplexMatrix& h, const std::function<double(double)>& f) {
    const auto eig = hermitian_eigs(h);
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(eig.values[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = fk * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

}  // namespace colldecay
