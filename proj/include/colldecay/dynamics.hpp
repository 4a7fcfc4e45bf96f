#pragma once

#include <cstddef>
#include <vector>

#include "colldecay/density.hpp"

namespace colldecay {

/// Two identical sites (qubits or qutrits) decaying collectively into one
/// reservoir through J- = J-^(1) + J-^(2).
///
/// Qubits: d rho/dt = (N+1)g/2 D[J-] rho + N g/2 D[J+] rho
/// Qutrits (zero temperature only): d rho/dt = g D[J-] rho
/// with D[A] rho = 2 A rho A^dagger - A^dagger A rho - rho A^dagger A.
class CollectiveModel {
public:
    /// Throws std::invalid_argument for local_dim outside {2, 3}, gamma <= 0,
    /// n_mean < 0, or n_mean > 0 with qutrits.
    CollectiveModel(std::size_t local_dim, double gamma, double n_mean);

    static CollectiveModel qubits(double gamma, double n_mean) { return {2, gamma, n_mean}; }
    static CollectiveModel qutrits(double gamma) { return {3, gamma, 0.0}; }

    std::size_t local_dim() const noexcept { return local_dim_; }
    BipartiteDims dims() const noexcept { return {local_dim_, local_dim_}; }
    double gamma() const noexcept { return gamma_; }
    double n_mean() const noexcept { return n_mean_; }
    const ComplexMatrix& j_minus() const noexcept { return j_minus_; }
    const ComplexMatrix& j_plus() const noexcept { return j_plus_; }

    /// Prefactor of D[J-] and D[J+] respectively.
    double emission_rate() const noexcept { return emission_rate_; }
    double absorption_rate() const noexcept { return absorption_rate_; }

    /// dt = 0.005 / (gamma (N+1)).
    double default_dt() const noexcept { return 0.005 / (gamma_ * (n_mean_ + 1.0)); }

private:
    std::size_t local_dim_;
    double gamma_;
    double n_mean_;
    double emission_rate_;
    double absorption_rate_;
    ComplexMatrix j_minus_;
    ComplexMatrix j_plus_;
    ComplexMatrix jp_jm_;
    ComplexMatrix jm_jp_;

    friend class LindbladWorkspace;
};

/// Single-site lowering operator for local dimension 2 or 3.
ComplexMatrix site_lowering(std::size_t local_dim);

/// Throws std::invalid_argument if rho's shape does not match the model.
ComplexMatrix lindblad_rhs(const CollectiveModel& model, const ComplexMatrix& rho);
ComplexMatrix lindblad_rhs(const CollectiveModel& model, const DensityMatrix& rho);

/// ||lindblad_rhs(rho)||_F
double stationarity_residual(const CollectiveModel& model, const DensityMatrix& rho);

struct IntegratorConfig {
    /// <= 0 means model.default_dt().
    double dt = 0.0;
    double t_max = 200.0;
    /// Convergence when ||d rho/dt||_F < convergence_tol * gamma.
    double convergence_tol = 1e-10;
    /// Steps between residual checks and trajectory samples.
    std::size_t check_interval = 20;
    /// evolve() stops at the first converged check when set.
    bool stop_at_convergence = false;
    /// Per-step re-Hermitization / trace correction above this fails the run.
    double max_correction = 1e-6;
};

struct TrajectorySample {
    double t;
    DensityMatrix rho;
    double rhs_norm;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool converged = false;
    /// Largest per-step drift correction applied.
    double max_correction = 0.0;
    std::size_t steps = 0;
};

/// Fixed-step classical RK4. After every step rho is re-Hermitized and its
/// trace reset to one; the correction is recorded and a correction above
/// cfg.max_correction throws std::runtime_error (reduce dt).
Trajectory evolve(const CollectiveModel& model, const DensityMatrix& rho0, const IntegratorConfig& cfg = {});

struct RelaxationResult {
    DensityMatrix state;
    double t_converged;
    double residual;
};

/// Integrates until the generator residual drops below
/// cfg.convergence_tol * gamma. Throws std::runtime_error when t_max passes
/// first.
RelaxationResult relax_to_stationary(const CollectiveModel& model, const DensityMatrix& rho0,
                                     const IntegratorConfig& cfg = {});

}  // namespace colldecay
