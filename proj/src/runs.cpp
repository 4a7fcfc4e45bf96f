#include "colldecay/runs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "colldecay/measures.hpp"
#include "colldecay/states.hpp"

namespace colldecay {

namespace {

using Row = std::vector<std::optional<double>>;

constexpr std::array<std::pair<std::string_view, SweepTarget>, 9> kTargets{{
    {"fig1", SweepTarget::fig1},
    {"fig2", SweepTarget::fig2},
    {"fig3", SweepTarget::fig3},
    {"fig4", SweepTarget::fig4},
    {"fig5", SweepTarget::fig5},
    {"fig6", SweepTarget::fig6},
    {"fig7", SweepTarget::fig7},
    {"fig8", SweepTarget::fig8},
    {"thresholds", SweepTarget::thresholds},
}};

void require_range(const GridRange& g, const char* name, double lo, double hi) {
    if (g.steps < 2) throw std::invalid_argument(std::string(name) + ": step count must be >= 2");
    if (!std::isfinite(g.min) || !std::isfinite(g.max) || g.min > g.max) {
        throw std::invalid_argument(std::string(name) + ": invalid range");
    }
    if (g.min < lo || g.max > hi) throw std::invalid_argument(std::string(name) + ": range outside parameter domain");
}

std::vector<double> occupation_values(const SweepRequest& req) {
    return req.n_values.empty() ? req.n_mean.values() : req.n_values;
}

WernerCase case_of(SweepTarget t) {
    switch (t) {
        case SweepTarget::fig2:
        case SweepTarget::fig4:
        case SweepTarget::fig7:
            return WernerCase::triplet;
        default:
            return WernerCase::singlet;
    }
}

std::vector<std::string> columns_of(SweepTarget t) {
    switch (t) {
        case SweepTarget::fig1: return {"r", "n_mean", "c1"};
        case SweepTarget::fig2: return {"r", "n_mean", "c2"};
        case SweepTarget::fig3:
        case SweepTarget::fig4: return {"r", "n_mean", "delta_c"};
        case SweepTarget::fig5: return {"r", "n_mean", "chsh_max"};
        case SweepTarget::fig6:
        case SweepTarget::fig7:
            return {"n_mean", "r", "linear_entropy", "concurrence", "werner_linear_entropy", "werner_concurrence"};
        case SweepTarget::fig8: return {"eta", "negativity", "negativity_closed_form"};
        case SweepTarget::thresholds:
            return {"n_mean", "r_entangle_case1", "r_bell", "r_entangle_case2", "case2_entanglable"};
    }
    throw std::logic_error("unknown sweep target");
}

Row surface_row(SweepTarget target, double r, double n) {
    const WernerCase which = case_of(target);
    const DensityMatrix stationary = stationary_qubit(which, r, n);
    switch (target) {
        case SweepTarget::fig1:
        case SweepTarget::fig2:
            return {r, n, concurrence(stationary)};
        case SweepTarget::fig3:
        case SweepTarget::fig4: {
            const double gain = concurrence(stationary) - concurrence(werner_qubit(r, which));
            return {r, n, std::max(0.0, gain)};
        }
        case SweepTarget::fig5:
            return {r, n, chsh_max(stationary)};
        case SweepTarget::fig6:
        case SweepTarget::fig7: {
            const DensityMatrix initial = werner_qubit(r, which);
            return {n, r, linear_entropy(stationary), concurrence(stationary), linear_entropy(initial),
                    concurrence(initial)};
        }
        default:
            throw std::logic_error("surface_row: not a surface target");
    }
}

Row threshold_row(double n) {
    const bool entanglable = n < triplet_entanglement_max_occupation();
    return {n, entanglement_threshold_singlet(n), bell_violation_threshold(n), entanglement_bound_triplet(n),
            entanglable ? 1.0 : 0.0};
}

Row eta_row(double eta) {
    return {eta, negativity(qutrit_stationary_werner(eta)), qutrit_negativity_closed_form(eta)};
}

std::string_view value_column(SweepTarget t) {
    switch (t) {
        case SweepTarget::fig1: return "c1";
        case SweepTarget::fig2: return "c2";
        case SweepTarget::fig3:
        case SweepTarget::fig4: return "delta_c";
        case SweepTarget::fig5: return "chsh_max";
        case SweepTarget::fig6:
        case SweepTarget::fig7: return "concurrence";
        case SweepTarget::fig8: return "negativity";
        case SweepTarget::thresholds: return "r_bell";
    }
    return "";
}

}  // namespace

std::optional<SweepTarget> parse_sweep_target(std::string_view name) {
    for (const auto& [key, value] : kTargets)
        if (key == name) return value;
    return std::nullopt;
}

std::string_view to_string(SweepTarget target) {
    for (const auto& [key, value] : kTargets)
        if (value == target) return key;
    return "unknown";
}

std::vector<double> GridRange::values() const {
    std::vector<double> v(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        v[k] = steps == 1 ? min : min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    if (steps > 1) v.back() = max;
    return v;
}

void validate(const SweepRequest& req) {
    const double inf = std::numeric_limits<double>::infinity();
    switch (req.target) {
        case SweepTarget::fig8:
            require_range(req.eta, "eta", 0.5, inf);
            break;
        case SweepTarget::thresholds:
            if (req.n_values.empty()) require_range(req.n_mean, "n_mean", 0.0, inf);
            break;
        default:
            require_range(req.r, "r", 0.0, 1.0);
            if (req.n_values.empty()) require_range(req.n_mean, "n_mean", 0.0, inf);
            break;
    }
    for (double n : req.n_values)
        if (!(n >= 0.0) || !std::isfinite(n)) throw std::invalid_argument("n_mean values must be finite and >= 0");
}

CsvTable compute_sweep(const SweepRequest& req, Execution exec) {
    validate(req);
    CsvTable table{columns_of(req.target), {}};
    std::vector<Row> rows;
    if (req.target == SweepTarget::fig8) {
        const auto etas = req.eta.values();
        rows = map_indexed(etas.size(), [&](std::size_t i) { return eta_row(etas[i]); }, exec);
    } else if (req.target == SweepTarget::thresholds) {
        const auto ns = occupation_values(req);
        rows = map_indexed(ns.size(), [&](std::size_t i) { return threshold_row(ns[i]); }, exec);
    } else {
        const auto rs = req.r.values();
        const auto ns = occupation_values(req);
        rows = map_indexed(
            rs.size() * ns.size(),
            [&](std::size_t i) { return surface_row(req.target, rs[i / ns.size()], ns[i % ns.size()]); }, exec);
    }
    for (auto& row : rows) table.add_row(std::move(row));
    return table;
}

SweepSummary run_sweep(const SweepRequest& req, Execution exec) {
    const CsvTable table = compute_sweep(req, exec);
    write_csv_file(table, req.output_path);

    SweepSummary s;
    s.rows = table.rows.size();
    s.value_column = std::string(value_column(req.target));
    const std::size_t col = table.column_index(s.value_column);
    s.value_min = std::numeric_limits<double>::infinity();
    s.value_max = -std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
        s.value_min = std::min(s.value_min, *row[col]);
        s.value_max = std::max(s.value_max, *row[col]);
    }
    return s;
}

std::optional<InitialState> parse_initial_state(std::string_view name) {
    if (name == "werner1") return InitialState::werner1;
    if (name == "werner2") return InitialState::werner2;
    if (name == "mixed") return InitialState::mixed;
    if (name == "qutrit-werner") return InitialState::qutrit_werner;
    if (name == "qutrit-mixed") return InitialState::qutrit_mixed;
    return std::nullopt;
}

DensityMatrix initial_state(const EvolveRequest& req) {
    switch (req.initial) {
        case InitialState::werner1: return werner_qubit(req.r, WernerCase::singlet);
        case InitialState::werner2: return werner_qubit(req.r, WernerCase::triplet);
        case InitialState::mixed: return maximally_mixed(kTwoQubits);
        case InitialState::qutrit_werner: return qutrit_werner(req.eta);
        case InitialState::qutrit_mixed: return maximally_mixed(kTwoQutrits);
    }
    throw std::logic_error("unknown initial state");
}

CsvTable compute_evolution(const EvolveRequest& req) {
    const DensityMatrix rho0 = initial_state(req);
    const CollectiveModel model(rho0.dims().a, req.gamma, req.n_mean);

    IntegratorConfig cfg;
    cfg.dt = req.dt;
    cfg.t_max = req.t_max;
    cfg.check_interval = req.sample_interval;
    cfg.stop_at_convergence = req.stop_at_convergence;
    const Trajectory traj = evolve(model, rho0, cfg);

    CsvTable table{{"t", "concurrence", "negativity", "chsh_max", "linear_entropy", "singlet_fraction", "rhs_norm",
                    "converged"},
                   {}};
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const auto& s = traj.samples[k];
        // Validated copy: measurement only ever sees states that pass the density checks.
        const DensityMatrix rho(s.rho.matrix(), s.rho.dims());
        const MeasureReport m = measure(rho);
        const bool last = k + 1 == traj.samples.size();
        table.add_row({s.t, m.concurrence, m.negativity, m.chsh_max, m.linear_entropy, m.singlet_fraction, s.rhs_norm,
                       last && traj.converged ? 1.0 : 0.0});
    }
    return table;
}

EvolveSummary run_evolve(const EvolveRequest& req) {
    const CsvTable table = compute_evolution(req);
    write_csv_file(table, req.output_path);
    EvolveSummary s;
    s.rows = table.rows.size();
    s.columns = table.columns;
    s.final_row = table.rows.back();
    s.t_final = *s.final_row.front();
    s.converged = *s.final_row.back() == 1.0;
    return s;
}

}  // namespace colldecay
