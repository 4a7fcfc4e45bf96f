#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colldecay/csv.hpp"
#include "colldecay/dynamics.hpp"
#include "colldecay/parallel.hpp"

namespace colldecay {

// Parameter sweeps and single-trajectory runs behind the command-line tool.
//
// Sweep targets and their columns (rows ordered r-major, then n_mean):
//   fig1  r, n_mean, c1                  concurrence of the singlet-case stationary state
//   fig2  r, n_mean, c2                  concurrence of the triplet-case stationary state
//   fig3  r, n_mean, delta_c             concurrence gain over the initial state, singlet case
//   fig4  r, n_mean, delta_c             same, triplet case
//   fig5  r, n_mean, chsh_max            maximal CHSH value, singlet case
//   fig6  n_mean, r, linear_entropy, concurrence, werner_linear_entropy, werner_concurrence
//   fig7  same columns as fig6 for the triplet case
//   fig8  eta, negativity, negativity_closed_form
//   thresholds  n_mean, r_entangle_case1, r_bell, r_entangle_case2, case2_entanglable

enum class SweepTarget { fig1, fig2, fig3, fig4, fig5, fig6, fig7, fig8, thresholds };

std::optional<SweepTarget> parse_sweep_target(std::string_view name);
std::string_view to_string(SweepTarget target);

struct GridRange {
    double min;
    double max;
    std::size_t steps;

    /// steps points, both ends included.
    std::vector<double> values() const;
};

struct SweepRequest {
    SweepTarget target = SweepTarget::fig1;
    GridRange r{0.0, 1.0, 50};
    GridRange n_mean{0.0, 3.0, 50};
    GridRange eta{0.5, 20.0, 200};
    /// Explicit n_mean values; replaces the n_mean grid when non-empty.
    std::vector<double> n_values;
    std::string output_path;
};

/// Throws std::invalid_argument for step counts below 2, inverted ranges or
/// values outside each parameter's domain.
void validate(const SweepRequest& req);

CsvTable compute_sweep(const SweepRequest& req, Execution exec = Execution::openmp);

struct SweepSummary {
    std::size_t rows = 0;
    std::string value_column;
    double value_min = 0.0;
    double value_max = 0.0;
};

/// Validates, computes, writes req.output_path.
SweepSummary run_sweep(const SweepRequest& req, Execution exec = Execution::openmp);

enum class InitialState { werner1, werner2, mixed, qutrit_werner, qutrit_mixed };

std::optional<InitialState> parse_initial_state(std::string_view name);

struct EvolveRequest {
    InitialState initial = InitialState::werner1;
    double r = 0.0;
    double eta = 2.0;
    double n_mean = 0.0;
    double gamma = 1.0;
    /// <= 0 selects the model default.
    double dt = 0.0;
    double t_max = 100.0;
    std::size_t sample_interval = 20;
    bool stop_at_convergence = true;
    std::string output_path;
};

DensityMatrix initial_state(const EvolveRequest& req);

/// Columns: t, concurrence, negativity, chsh_max, linear_entropy,
/// singlet_fraction, rhs_norm, converged. Qubit-only measures are empty for
/// qutrit runs; converged is 1 only on a final row that met the criterion.
CsvTable compute_evolution(const EvolveRequest& req);

struct EvolveSummary {
    std::size_t rows = 0;
    bool converged = false;
    double t_final = 0.0;
    std::vector<std::string> columns;
    std::vector<std::optional<double>> final_row;
};

/// Computes the trajectory table and writes req.output_path.
EvolveSummary run_evolve(const EvolveRequest& req);

}  // namespace colldecay
