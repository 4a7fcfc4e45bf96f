#pragma once

#include <cstddef>
#include <string>

#include "colldecay/matrix.hpp"

namespace colldecay {

/// One place for every numerical tolerance used when judging states.
struct ToleranceConfig {
    double hermiticity = 1e-10;
    double trace = 1e-10;
    /// Smallest eigenvalue still accepted as positive semidefinite.
    double psd_slack = -1e-9;
};

struct BipartiteDims {
    std::size_t a = 2;
    std::size_t b = 2;

    std::size_t total() const noexcept { return a * b; }
    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr BipartiteDims kTwoQubits{2, 2};
inline constexpr BipartiteDims kTwoQutrits{3, 3};

enum class Subsystem { A, B };

struct ValidityReport {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool valid = false;

    std::string describe() const;
};

/// Hermiticity, trace and positivity diagnostics. Never throws for square
/// input; a non-square matrix yields an invalid report.
ValidityReport is_valid_density(const ComplexMatrix& m, const ToleranceConfig& tol = {});

/// A bipartite density matrix. Construction validates Hermiticity, unit trace
/// and positivity against the given tolerances.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix m, BipartiteDims dims, const ToleranceConfig& tol = {});

    /// Skips the eigen-based positivity check. Shape and dims are still
    /// checked. Used for integrator samples whose validity is audited
    /// separately.
    static DensityMatrix unchecked(ComplexMatrix m, BipartiteDims dims);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    BipartiteDims dims() const noexcept { return dims_; }
    std::size_t dim() const noexcept { return m_.rows(); }

private:
    struct NoCheck {};
    DensityMatrix(ComplexMatrix m, BipartiteDims dims, NoCheck);

    ComplexMatrix m_;
    BipartiteDims dims_;
};

/// Partial transpose on the chosen subsystem:
/// A: <i,j|X|k,l> -> <k,j|X|i,l>;  B: <i,j|X|k,l> -> <i,l|X|k,j>.
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem which);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which);

}  // namespace colldecay
