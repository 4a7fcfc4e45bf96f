#include "colldecay/density.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "colldecay/eigen.hpp"

namespace colldecay {

std::string ValidityReport::describe() const {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << " (hermiticity defect " << hermiticity_defect
       << ", trace defect " << trace_defect << ", min eigenvalue " << min_eigenvalue << ")";
    return os.str();
}

ValidityReport is_valid_density(const ComplexMatrix& m, const ToleranceConfig& tol) {
    ValidityReport r;
    if (!m.is_square() || !m.all_finite()) {
        r.hermiticity_defect = std::numeric_limits<double>::infinity();
        r.trace_defect = std::numeric_limits<double>::infinity();
        r.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.hermiticity_defect = hermiticity_defect(m);
    r.trace_defect = std::abs(m.trace() - 1.0);
    if (r.hermiticity_defect <= tol.hermiticity) {
        r.min_eigenvalue = hermitian_eigenvalues(m).front();
    } else {
        // Spectrum of the Hermitian part; the verdict is already invalid.
        const ComplexMatrix herm = 0.5 * (m + m.dagger());
        r.min_eigenvalue = hermitian_eigenvalues(herm).front();
    }
    r.valid = r.hermiticity_defect <= tol.hermiticity && r.trace_defect <= tol.trace &&
              r.min_eigenvalue >= tol.psd_slack;
    return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, BipartiteDims dims, NoCheck)
    : m_(std::move(m)), dims_(dims) {
    if (!m_.is_square() || m_.rows() != dims_.total()) {
        throw std::invalid_argument("DensityMatrix: dimension mismatch with bipartite split");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, BipartiteDims dims, const ToleranceConfig& tol)
    : DensityMatrix(std::move(m), dims, NoCheck{}) {
    const auto report = is_valid_density(m_, tol);
    if (!report.valid) throw std::invalid_argument("DensityMatrix: " + report.describe());
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, BipartiteDims dims) {
    return DensityMatrix(std::move(m), dims, NoCheck{});
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem which) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw std::invalid_argument("partial_transpose: dimension mismatch");
    }
    const std::size_t da = dims.a, db = dims.b;
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    const Complex x = m(i * db + j, k * db + l);
                    if (which == Subsystem::A) {
                        out(k * db + j, i * db + l) = x;
                    } else {
                        out(i * db + l, k * db + j) = x;
                    }
                }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
    return partial_transpose(rho.matrix(), rho.dims(), which);
}

}  // namespace colldecay
