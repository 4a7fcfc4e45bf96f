#include "colldecay/dynamics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace colldecay {

ComplexMatrix site_lowering(std::size_t local_dim) {
    if (local_dim == 2) return pauli::lowering();
    if (local_dim == 3) {
        // sqrt(2)|1><2| + sqrt(2)|2><3|, level 1 = ground
        ComplexMatrix m(3, 3);
        m(0, 1) = std::sqrt(2.0);
        m(1, 2) = std::sqrt(2.0);
        return m;
    }
    throw std::invalid_argument("site_lowering: local dimension must be 2 or 3");
}

CollectiveModel::CollectiveModel(std::size_t local_dim, double gamma, double n_mean)
    : local_dim_(local_dim),
      gamma_(gamma),
      n_mean_(n_mean),
      emission_rate_(0.0),
      absorption_rate_(0.0),
      j_minus_(1, 1),
      j_plus_(1, 1),
      jp_jm_(1, 1),
      jm_jp_(1, 1) {
    if (local_dim != 2 && local_dim != 3) throw std::invalid_argument("CollectiveModel: local_dim must be 2 or 3");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("CollectiveModel: gamma must be > 0");
    if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) throw std::invalid_argument("CollectiveModel: n_mean must be >= 0");
    if (local_dim == 3 && n_mean != 0.0) {
        throw std::invalid_argument("CollectiveModel: qutrit decay is only defined at zero temperature (n_mean = 0)");
    }

    const ComplexMatrix lower = site_lowering(local_dim);
    const ComplexMatrix id = ComplexMatrix::identity(local_dim);
    j_minus_ = kron(lower, id) + kron(id, lower);
    j_plus_ = j_minus_.dagger();
    jp_jm_ = j_plus_ * j_minus_;
    jm_jp_ = j_minus_ * j_plus_;

    if (local_dim == 2) {
        emission_rate_ = 0.5 * (n_mean + 1.0) * gamma;
        absorption_rate_ = 0.5 * n_mean * gamma;
    } else {
        emission_rate_ = gamma;
    }
}

/// Scratch buffers for allocation-free generator evaluation.
class LindbladWorkspace {
public:
    explicit LindbladWorkspace(const CollectiveModel& model)
        : model_(model), n_(model.dims().total()), t1_(n_, n_), t2_(n_, n_) {}

    void rhs(const ComplexMatrix& rho, ComplexMatrix& out) {
        for (auto& z : out.entries()) z = 0.0;
        dissipator(model_.j_minus_, model_.j_plus_, model_.jp_jm_, model_.emission_rate_, rho, out);
        if (model_.absorption_rate_ != 0.0) {
            dissipator(model_.j_plus_, model_.j_minus_, model_.jm_jp_, model_.absorption_rate_, rho, out);
        }
    }

private:
    // out += rate (2 A rho A^dagger - A^dagger A rho - rho A^dagger A)
    void dissipator(const ComplexMatrix& a, const ComplexMatrix& a_dag, const ComplexMatrix& a_dag_a,
                    double rate, const ComplexMatrix& rho, ComplexMatrix& out) {
        multiply_into(a, rho, t1_);
        multiply_into(t1_, a_dag, t2_);
        out.add_scaled(t2_, 2.0 * rate);
        multiply_into(a_dag_a, rho, t1_);
        out.add_scaled(t1_, -rate);
        multiply_into(rho, a_dag_a, t1_);
        out.add_scaled(t1_, -rate);
    }

    const CollectiveModel& model_;
    std::size_t n_;
    ComplexMatrix t1_;
    ComplexMatrix t2_;
};

namespace {

void require_shape(const CollectiveModel& model, const ComplexMatrix& rho) {
    const std::size_t n = model.dims().total();
    if (rho.rows() != n || rho.cols() != n) {
        throw std::invalid_argument("lindblad_rhs: state dimension " + std::to_string(rho.rows()) +
                                    " does not match model dimension " + std::to_string(n));
    }
}

using CheckFn = std::function<bool(double t, const ComplexMatrix& rho, double rhs_norm)>;

struct IntegrationStats {
    bool converged = false;
    double max_correction = 0.0;
    std::size_t steps = 0;
};

// Drives RK4 and calls on_check every cfg.check_interval steps (and at t = 0
// and the final step). on_check returning true stops the loop.
IntegrationStats integrate(const CollectiveModel& model, const DensityMatrix& rho0, const IntegratorConfig& cfg,
                           const CheckFn& on_check) {
    if (rho0.dims() != model.dims()) throw std::invalid_argument("evolve: initial state dims do not match model");
    const double dt = cfg.dt > 0.0 ? cfg.dt : model.default_dt();
    if (!std::isfinite(dt)) throw std::invalid_argument("evolve: dt must be finite");
    if (!(cfg.t_max >= 0.0) || !std::isfinite(cfg.t_max)) throw std::invalid_argument("evolve: t_max must be >= 0");
    if (cfg.check_interval == 0) throw std::invalid_argument("evolve: check_interval must be >= 1");

    const std::size_t n = model.dims().total();
    const auto total_steps = static_cast<std::size_t>(std::ceil(cfg.t_max / dt - 1e-9));
    const double threshold = cfg.convergence_tol * model.gamma();

    LindbladWorkspace ws(model);
    ComplexMatrix rho = rho0.matrix();
    ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n), drift(n, n);

    IntegrationStats stats;
    auto check = [&](double t) {
        ws.rhs(rho, drift);
        const double residual = drift.frobenius_norm();
        const bool converged = residual < threshold;
        if (converged) stats.converged = true;
        return on_check(t, rho, residual) || (converged && cfg.stop_at_convergence);
    };

    if (check(0.0)) return stats;
    stats.converged = false;

    for (std::size_t step = 1; step <= total_steps; ++step) {
        ws.rhs(rho, k1);
        stage = rho;
        stage.add_scaled(k1, 0.5 * dt);
        ws.rhs(stage, k2);
        stage = rho;
        stage.add_scaled(k2, 0.5 * dt);
        ws.rhs(stage, k3);
        stage = rho;
        stage.add_scaled(k3, dt);
        ws.rhs(stage, k4);
        rho.add_scaled(k1, dt / 6.0);
        rho.add_scaled(k2, dt / 3.0);
        rho.add_scaled(k3, dt / 3.0);
        rho.add_scaled(k4, dt / 6.0);

        // Drift control: re-Hermitize, then renormalize the trace.
        Complex trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += rho(i, i);
        const double inv_trace = 1.0 / trace.real();
        double correction_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const Complex sym = 0.5 * (rho(i, j) + std::conj(rho(j, i))) * inv_trace;
                correction_sq += std::norm(sym - rho(i, j));
                if (j != i) correction_sq += std::norm(std::conj(sym) - rho(j, i));
                rho(i, j) = sym;
                rho(j, i) = std::conj(sym);
            }
            rho(i, i) = rho(i, i).real();
        }
        const double correction = std::sqrt(correction_sq);
        if (correction > stats.max_correction) stats.max_correction = correction;
        stats.steps = step;
        if (!(correction <= cfg.max_correction)) {
            throw std::runtime_error("evolve: integration unstable at t = " + std::to_string(step * dt) +
                                     " (drift correction " + std::to_string(correction) + "); reduce dt");
        }

        if (step % cfg.check_interval == 0 || step == total_steps) {
            stats.converged = false;
            if (check(static_cast<double>(step) * dt)) return stats;
        }
    }
    return stats;
}

}  // namespace

ComplexMatrix lindblad_rhs(const CollectiveModel& model, const ComplexMatrix& rho) {
    require_shape(model, rho);
    LindbladWorkspace ws(model);
    ComplexMatrix out(rho.rows(), rho.cols());
    ws.rhs(rho, out);
    return out;
}

ComplexMatrix lindblad_rhs(const CollectiveModel& model, const DensityMatrix& rho) {
    return lindblad_rhs(model, rho.matrix());
}

double stationarity_residual(const CollectiveModel& model, const DensityMatrix& rho) {
    return lindblad_rhs(model, rho).frobenius_norm();
}

Trajectory evolve(const CollectiveModel& model, const DensityMatrix& rho0, const IntegratorConfig& cfg) {
    Trajectory traj;
    const auto dims = model.dims();
    const auto stats = integrate(model, rho0, cfg, [&](double t, const ComplexMatrix& rho, double residual) {
        traj.samples.push_back({t, DensityMatrix::unchecked(rho, dims), residual});
        return false;
    });
    traj.converged = stats.converged;
    traj.max_correction = stats.max_correction;
    traj.steps = stats.steps;
    return traj;
}

RelaxationResult relax_to_stationary(const CollectiveModel& model, const DensityMatrix& rho0,
                                     const IntegratorConfig& cfg) {
    IntegratorConfig c = cfg;
    c.stop_at_convergence = true;
    ComplexMatrix last = rho0.matrix();
    double last_t = 0.0, last_residual = 0.0;
    const auto stats = integrate(model, rho0, c, [&](double t, const ComplexMatrix& rho, double residual) {
        last = rho;
        last_t = t;
        last_residual = residual;
        return false;
    });
    if (!stats.converged) {
        throw std::runtime_error("relax_to_stationary: no convergence before t_max = " + std::to_string(cfg.t_max) +
                                 " (residual " + std::to_string(last_residual) + ")");
    }
    return {DensityMatrix::unchecked(std::move(last), model.dims()), last_t, last_residual};
}

}  // namespace colldecay
