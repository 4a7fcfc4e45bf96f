#pragma once

#include <functional>
#include <vector>

#include "colldecay/matrix.hpp"

namespace colldecay {

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    ComplexMatrix vectors;
};

struct JacobiOptions {
    /// Allowed ||h - h^dagger||_F, relative to max(1, ||h||_F).
    double hermiticity_tol = 1e-10;
    int max_sweeps = 64;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot a_pq with a diagonal
/// unitary and then applies a real Givens rotation, so the iteration runs
/// directly on the complex matrix. Converges quadratically; for n <= 9 a
/// handful of sweeps reaches machine precision.
///
/// Throws std::invalid_argument("not Hermitian") and
/// std::runtime_error("eigs failed") when the sweep cap is hit.
EigenDecomposition hermitian_eigs(const ComplexMatrix& h, const JacobiOptions& opts = {});

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const JacobiOptions& opts = {});

/// V f(Lambda) V^dagger for Hermitian h.
ComplexMatrix spectral_map(const ComplexMatrix& h, const std::function<double(double)>& f);

}  // namespace colldecay
