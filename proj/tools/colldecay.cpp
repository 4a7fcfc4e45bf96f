// colldecay: parameter sweeps, single trajectories and the verification suite.

#include <CLI11.hpp>

#include <exception>
#include <iomanip>
#include <iostream>
#include <map>

#include "colldecay/runs.hpp"
#include "colldecay/verify.hpp"

using namespace colldecay;

namespace {

std::map<std::string, SweepTarget> target_map() {
    std::map<std::string, SweepTarget> m;
    for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "thresholds"})
        m.emplace(name, *parse_sweep_target(name));
    return m;
}

void print_cell(std::ostream& os, const std::optional<double>& v) {
    if (v)
        os << format_number(*v);
    else
        os << "-";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective decay of two qubits or two qutrits: stationary states and entanglement measures"};
    app.require_subcommand(1);

    SweepRequest sweep;
    std::string target_name = "fig1";
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a figure dataset or threshold table over a grid");
    sweep_cmd->add_option("--target", target_name, "fig1..fig8 or thresholds")
        ->required()
        ->check(CLI::IsMember(target_map()));
    sweep_cmd->add_option("--r-min", sweep.r.min)->capture_default_str();
    sweep_cmd->add_option("--r-max", sweep.r.max)->capture_default_str();
    sweep_cmd->add_option("--r-steps", sweep.r.steps)->capture_default_str();
    sweep_cmd->add_option("--n-min", sweep.n_mean.min)->capture_default_str();
    sweep_cmd->add_option("--n-max", sweep.n_mean.max)->capture_default_str();
    sweep_cmd->add_option("--n-steps", sweep.n_mean.steps)->capture_default_str();
    sweep_cmd->add_option("--n-values", sweep.n_values, "Explicit mean occupations, replacing the n grid")
        ->delimiter(',');
    sweep_cmd->add_option("--eta-min", sweep.eta.min)->capture_default_str();
    sweep_cmd->add_option("--eta-max", sweep.eta.max)->capture_default_str();
    sweep_cmd->add_option("--eta-steps", sweep.eta.steps)->capture_default_str();
    sweep_cmd->add_option("--out", sweep.output_path, "CSV output path")->required();

    EvolveRequest evolve;
    std::string initial_name;
    bool no_stop = false;
    auto* evolve_cmd = app.add_subcommand("evolve", "Integrate the master equation from a named initial state");
    evolve_cmd->add_option("--initial", initial_name, "werner1, werner2, mixed, qutrit-werner or qutrit-mixed")
        ->required();
    evolve_cmd->add_option("--r", evolve.r, "Werner parameter")->capture_default_str();
    evolve_cmd->add_option("--eta", evolve.eta, "Qutrit Werner parameter")->capture_default_str();
    evolve_cmd->add_option("--n-mean", evolve.n_mean, "Mean reservoir occupation")->capture_default_str();
    evolve_cmd->add_option("--gamma", evolve.gamma)->capture_default_str();
    evolve_cmd->add_option("--dt", evolve.dt, "Step size; 0 picks the model default")->capture_default_str();
    evolve_cmd->add_option("--t-max", evolve.t_max)->capture_default_str();
    evolve_cmd->add_option("--sample-every", evolve.sample_interval, "Steps between rows")->capture_default_str();
    evolve_cmd->add_flag("--no-stop", no_stop, "Keep integrating to t-max after convergence");
    evolve_cmd->add_option("--out", evolve.output_path, "CSV output path")->required();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--tol", verify.tolerance, "Override every deviation tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) {
            sweep.target = *parse_sweep_target(target_name);
            const SweepSummary s = run_sweep(sweep);
            std::cout << "sweep " << target_name << ": " << s.rows << " rows -> " << sweep.output_path << '\n'
                      << s.value_column << " in [" << format_number(s.value_min) << ", "
                      << format_number(s.value_max) << "]\n";
            return 0;
        }
        if (*evolve_cmd) {
            const auto initial = parse_initial_state(initial_name);
            if (!initial) {
                std::cerr << "error: unknown initial state '" << initial_name << "'\n";
                return 2;
            }
            evolve.initial = *initial;
            evolve.stop_at_convergence = !no_stop;
            const EvolveSummary s = run_evolve(evolve);
            std::cout << "evolve " << initial_name << ": " << s.rows << " rows -> " << evolve.output_path << '\n'
                      << (s.converged ? "converged" : "not converged") << " at t = " << format_number(s.t_final)
                      << '\n';
            for (std::size_t k = 1; k + 1 < s.columns.size(); ++k) {
                std::cout << "  " << std::left << std::setw(18) << s.columns[k];
                print_cell(std::cout, s.final_row[k]);
                std::cout << '\n';
            }
            return 0;
        }
        const VerifyReport report = run_verify(verify);
        print_report(report, std::cout);
        return report.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
