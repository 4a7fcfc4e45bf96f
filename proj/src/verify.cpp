#include "colldecay/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "colldecay/distillation.hpp"
#include "colldecay/dynamics.hpp"
#include "colldecay/eigen.hpp"
#include "colldecay/measures.hpp"
#include "colldecay/random_states.hpp"
#include "colldecay/states.hpp"

namespace colldecay {

namespace {

class Suite {
public:
    explicit Suite(const VerifyOptions& opts) : opts_(opts) {}

    void deviation(std::string name, double dev, double tol, std::string detail = {}) {
        if (opts_.tolerance) tol = *opts_.tolerance;
        push(std::move(name), dev, tol, std::move(detail));
    }

    void count(std::string name, std::size_t failures, std::string detail = {}) {
        push(std::move(name), static_cast<double>(failures), 0.0, std::move(detail));
    }

    Execution exec() const { return opts_.exec; }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    void push(std::string name, double dev, double tol, std::string detail) {
        const bool ok = std::isfinite(dev) && dev <= tol;
        results_.push_back({std::move(name), dev, tol, ok, std::move(detail)});
    }

    VerifyOptions opts_;
    std::vector<CheckResult> results_;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    return v;
}

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

constexpr std::array<WernerCase, 2> kCases{WernerCase::singlet, WernerCase::triplet};

// ---------------------------------------------------------------- linalg

void check_linalg(Suite& s) {
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<int> pick(2, 3);

    double kron_dev = 0.0;
    for (int k = 0; k < 200; ++k) {
        const auto a = random_ginibre(rng, pick(rng), pick(rng));
        const auto b = random_ginibre(rng, pick(rng), pick(rng));
        const auto c = random_ginibre(rng, pick(rng), pick(rng));
        kron_dev = std::max(kron_dev, frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))));
    }
    s.deviation("linalg.kron_associativity", kron_dev, 1e-12);

    std::uniform_int_distribution<std::size_t> size(1, 9);
    std::vector<ComplexMatrix> hs;
    for (int k = 0; k < 300; ++k) hs.push_back(random_hermitian(rng, size(rng)));
    const auto devs = map_indexed(
        hs.size(),
        [&](std::size_t i) {
            const auto& h = hs[i];
            const auto eig = hermitian_eigs(h);
            double sum = 0.0, sum_sq = 0.0;
            for (double x : eig.values) {
                sum += x;
                sum_sq += x * x;
            }
            const double trace_dev = std::max(std::abs(sum - h.trace().real()),
                                              std::abs(sum_sq - trace_of_product(h, h).real()));
            double residual = 0.0;
            const std::size_t n = h.rows();
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Complex> v(n);
                for (std::size_t i2 = 0; i2 < n; ++i2) v[i2] = eig.vectors(i2, k);
                auto hv = matvec(h, v);
                double r2 = 0.0;
                for (std::size_t i2 = 0; i2 < n; ++i2) r2 += std::norm(hv[i2] - eig.values[k] * v[i2]);
                residual = std::max(residual, std::sqrt(r2));
            }
            const double ortho = frobenius_distance(eig.vectors.dagger() * eig.vectors, ComplexMatrix::identity(n));
            bool ascending = std::is_sorted(eig.values.begin(), eig.values.end());
            return std::array<double, 3>{trace_dev, std::max(residual, ortho), ascending ? 0.0 : 1.0};
        },
        s.exec());
    double trace_dev = 0.0, residual = 0.0, unsorted = 0.0;
    for (const auto& d : devs) {
        trace_dev = std::max(trace_dev, d[0]);
        residual = std::max(residual, d[1]);
        unsorted += d[2];
    }
    s.deviation("linalg.eigs_trace_identities", trace_dev, 1e-10, "sum l = Tr H, sum l^2 = Tr H^2");
    s.deviation("linalg.eigs_residuals", residual, 1e-10, "||Hv - lv|| and ||V^+V - I||");
    s.count("linalg.eigs_ascending", static_cast<std::size_t>(unsorted));

    double involution = 0.0, trace_pt = 0.0;
    for (const auto dims : {kTwoQubits, kTwoQutrits, BipartiteDims{2, 3}, BipartiteDims{3, 2}}) {
        for (int k = 0; k < 50; ++k) {
            const auto rho = random_density(rng, dims);
            for (const auto which : {Subsystem::A, Subsystem::B}) {
                const auto pt = partial_transpose(rho, which);
                involution = std::max(involution, frobenius_distance(partial_transpose(pt, dims, which), rho.matrix()));
                trace_pt = std::max(trace_pt, std::abs(pt.trace() - rho.matrix().trace()));
            }
        }
    }
    s.deviation("linalg.partial_transpose_involution", involution, 0.0, "exact index permutation");
    s.deviation("linalg.partial_transpose_trace", trace_pt, 1e-14);
}

// ---------------------------------------------------------------- states

double density_defect(const DensityMatrix& rho) {
    const auto rep = is_valid_density(rho.matrix());
    return std::max({rep.hermiticity_defect, rep.trace_defect, std::max(0.0, -rep.min_eigenvalue)});
}

ComplexMatrix qutrit_swap() {
    ComplexMatrix swap(9, 9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) swap(qutrit_index(j, i), qutrit_index(i, j)) = 1.0;
    return swap;
}

void check_states(Suite& s) {
    std::vector<std::function<DensityMatrix()>> makers{
        [] { return bell_state(BellSign::plus); },
        [] { return bell_state(BellSign::minus); },
        [] { return maximally_mixed(kTwoQubits); },
        [] { return maximally_mixed(kTwoQutrits); },
        [] { return qutrit_stationary_mixed(); },
        [] { return qutrit_stationary_werner_limit(); },
    };
    for (double r : linspace(0.0, 1.0, 11))
        for (auto c : kCases) {
            makers.push_back([=] { return werner_qubit(r, c); });
            for (double n : linspace(0.0, 3.0, 7)) makers.push_back([=] { return stationary_qubit(c, r, n); });
        }
    for (double eta : {0.5, 0.6, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4}) {
        makers.push_back([=] { return qutrit_werner(eta); });
        makers.push_back([=] { return qutrit_stationary_werner(eta); });
    }
    const auto defects = map_indexed(makers.size(), [&](std::size_t i) { return density_defect(makers[i]()); }, s.exec());
    s.deviation("states.constructors_valid", max_of(defects), 1e-10,
                std::to_string(makers.size()) + " constructed states");

    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double fraction_dev = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double r = unit(rng);
        fraction_dev = std::max(fraction_dev, std::abs(singlet_fraction(werner_qubit(r, WernerCase::singlet)) -
                                                       (1.0 + 3.0 * r) / 4.0));
        fraction_dev = std::max(fraction_dev, std::abs(singlet_fraction(werner_qubit(r, WernerCase::triplet)) -
                                                       (1.0 - r) / 4.0));
    }
    s.deviation("states.werner_singlet_fraction", fraction_dev, 1e-12);

    double outside = 0.0, conserved = 0.0;
    const std::array<std::pair<int, int>, 6> allowed{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}}};
    for (auto c : kCases)
        for (double r : linspace(0.0, 1.0, 11))
            for (double n : linspace(0.0, 3.0, 13)) {
                const auto rho = stationary_qubit(c, r, n);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        const bool ok = std::find(allowed.begin(), allowed.end(), std::pair{i, j}) != allowed.end();
                        if (!ok) outside = std::max(outside, std::abs(rho.matrix()(i, j)));
                    }
                conserved = std::max(conserved, std::abs(singlet_fraction(rho) - werner_singlet_fraction(r, c)));
            }
    s.deviation("states.stationary_x_structure", outside, 0.0, "entries outside the X pattern are exactly zero");
    s.deviation("states.stationary_singlet_fraction", conserved, 1e-12, "equals the initial Werner value");

    // Werner symmetry: invariant under SWAP and under P (x) P for every
    // permutation P of the three levels.
    const ComplexMatrix swap = qutrit_swap();
    std::array<int, 3> perm{0, 1, 2};
    std::vector<ComplexMatrix> symmetries{swap};
    do {
        ComplexMatrix p(3, 3);
        for (int k = 0; k < 3; ++k) p(perm[k], k) = 1.0;
        symmetries.push_back(kron(p, p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    double symmetry = 0.0;
    for (double eta : {0.5, 0.75, 2.0, 10.0, 1e3}) {
        const auto rho = qutrit_werner(eta).matrix();
        for (const auto& u : symmetries) symmetry = std::max(symmetry, frobenius_distance(u * rho * u.dagger(), rho));
    }
    s.deviation("states.qutrit_werner_symmetry", symmetry, 1e-12);
}

// ---------------------------------------------------------------- dynamics

struct TrajectoryAudit {
    double trace = 0.0;
    double hermiticity = 0.0;
    double negativity_of_spectrum = 0.0;  // max(0, -min eigenvalue)
    double conserved_drift = 0.0;
    double final_distance = 0.0;
    bool converged = false;
};

TrajectoryAudit audit(const CollectiveModel& model, const DensityMatrix& rho0, const DensityMatrix& expected,
                      const std::function<double(const ComplexMatrix&)>& conserved) {
    IntegratorConfig cfg;
    cfg.t_max = 400.0;
    cfg.stop_at_convergence = true;
    const auto traj = evolve(model, rho0, cfg);
    TrajectoryAudit a;
    const double c0 = conserved(rho0.matrix());
    for (const auto& sample : traj.samples) {
        const auto& m = sample.rho.matrix();
        a.trace = std::max(a.trace, std::abs(m.trace() - 1.0));
        a.hermiticity = std::max(a.hermiticity, hermiticity_defect(m));
        a.negativity_of_spectrum = std::max(a.negativity_of_spectrum, -hermitian_eigenvalues(m).front());
        a.conserved_drift = std::max(a.conserved_drift, std::abs(conserved(m) - c0));
    }
    a.converged = traj.converged;
    a.final_distance = frobenius_distance(traj.samples.back().rho.matrix(), expected.matrix());
    return a;
}

double expectation(const std::vector<Complex>& v, const ComplexMatrix& m) { return inner(v, matvec(m, v)).real(); }

void record_family(Suite& s, const std::string& family, const std::vector<TrajectoryAudit>& audits) {
    TrajectoryAudit worst;
    std::size_t not_converged = 0;
    for (const auto& a : audits) {
        worst.trace = std::max(worst.trace, a.trace);
        worst.hermiticity = std::max(worst.hermiticity, a.hermiticity);
        worst.negativity_of_spectrum = std::max(worst.negativity_of_spectrum, a.negativity_of_spectrum);
        worst.conserved_drift = std::max(worst.conserved_drift, a.conserved_drift);
        worst.final_distance = std::max(worst.final_distance, a.final_distance);
        if (!a.converged) ++not_converged;
    }
    const std::string runs = std::to_string(audits.size()) + " runs";
    s.count("dynamics." + family + "_converged", not_converged, runs);
    s.deviation("dynamics." + family + "_relaxation", worst.final_distance, 1e-8, "Frobenius distance to closed form");
    s.deviation("dynamics." + family + "_trace", worst.trace, 1e-9);
    s.deviation("dynamics." + family + "_hermiticity", worst.hermiticity, 1e-9);
    s.deviation("dynamics." + family + "_positivity", worst.negativity_of_spectrum, 1e-8, "max(0, -min eigenvalue)");
    s.deviation("dynamics." + family + "_conservation", worst.conserved_drift, 1e-9,
                family == "qubit" ? "singlet population" : "antisymmetric-subspace weight");
}

void check_dynamics(Suite& s) {
    double residual = 0.0;
    for (auto c : kCases)
        for (double r : linspace(0.0, 1.0, 10))
            for (double n : linspace(0.0, 3.0, 10))
                residual = std::max(residual, stationarity_residual(CollectiveModel::qubits(1.0, n),
                                                                    stationary_qubit(c, r, n)));
    const auto qutrits = CollectiveModel::qutrits(1.0);
    residual = std::max(residual, stationarity_residual(qutrits, qutrit_stationary_mixed()));
    residual = std::max(residual, stationarity_residual(qutrits, qutrit_stationary_werner_limit()));
    for (double eta : {0.5, 0.6, 1.0, 2.0, 5.0, 10.0, 100.0})
        residual = std::max(residual, stationarity_residual(qutrits, qutrit_stationary_werner(eta)));
    s.deviation("dynamics.analytic_stationarity", residual, 1e-10, "||L rho_s||_F over closed-form states");

    struct QubitRun {
        WernerCase c;
        double r;
        double n;
    };
    std::vector<QubitRun> qubit_runs;
    for (auto c : kCases)
        for (double r : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (double n : {0.0, 0.5, 1.0, 2.0}) qubit_runs.push_back({c, r, n});
    const auto phi = bell_vector(BellSign::minus);
    const auto qubit_audits = map_indexed(
        qubit_runs.size(),
        [&](std::size_t i) {
            const auto& run = qubit_runs[i];
            return audit(CollectiveModel::qubits(1.0, run.n), werner_qubit(run.r, run.c),
                         stationary_qubit(run.c, run.r, run.n),
                         [&](const ComplexMatrix& m) { return expectation(phi, m); });
        },
        s.exec());
    record_family(s, "qubit", qubit_audits);

    struct QutritRun {
        DensityMatrix initial;
        DensityMatrix expected;
    };
    std::vector<QutritRun> qutrit_runs{{maximally_mixed(kTwoQutrits), qutrit_stationary_mixed()}};
    for (double eta : {0.5, 2.0, 10.0}) qutrit_runs.push_back({qutrit_werner(eta), qutrit_stationary_werner(eta)});
    // The collective generator commutes with SWAP, so the weight of the
    // antisymmetric subspace, (1 - Tr(SWAP rho))/2, is a constant of motion.
    const ComplexMatrix swap = qutrit_swap();
    const auto qutrit_audits = map_indexed(
        qutrit_runs.size(),
        [&](std::size_t i) {
            return audit(qutrits, qutrit_runs[i].initial, qutrit_runs[i].expected,
                         [&](const ComplexMatrix& m) { return 0.5 * (1.0 - trace_of_product(swap, m).real()); });
        },
        s.exec());
    record_family(s, "qutrit", qutrit_audits);
}

// ---------------------------------------------------------------- measures

void check_measures(Suite& s) {
    struct GridPoint {
        WernerCase c;
        double r;
        double n;
    };
    std::vector<GridPoint> grid;
    for (auto c : kCases)
        for (double r : linspace(0.0, 1.0, 20))
            for (double n : linspace(0.0, 3.0, 20)) grid.push_back({c, r, n});
    const auto oracle = map_indexed(
        grid.size(),
        [&](std::size_t i) {
            const auto& g = grid[i];
            const auto rho = stationary_qubit(g.c, g.r, g.n);
            return std::array<double, 3>{std::abs(concurrence(rho) - analytic_concurrence(g.c, g.r, g.n)),
                                         std::abs(chsh_max(rho) - analytic_chsh(g.c, g.r, g.n)),
                                         std::abs(negativity(rho) - analytic_negativity(g.c, g.r, g.n))};
        },
        s.exec());
    std::array<double, 3> worst{};
    for (const auto& o : oracle)
        for (int k = 0; k < 3; ++k) worst[k] = std::max(worst[k], o[k]);
    s.deviation("measures.concurrence_oracle", worst[0], 1e-9, "20x20 grid, both cases");
    s.deviation("measures.chsh_oracle", worst[1], 1e-9, "20x20 grid, both cases");
    s.deviation("measures.negativity_oracle", worst[2], 1e-9, "20x20 grid, both cases");

    double qutrit_dev = std::abs(qutrit_negativity_closed_form_limit() - negativity(qutrit_stationary_werner_limit()));
    for (double eta : {0.5, 0.6, 1.0, 2.0, 5.0, 10.0, 100.0})
        qutrit_dev = std::max(qutrit_dev,
                              std::abs(qutrit_negativity_closed_form(eta) - negativity(qutrit_stationary_werner(eta))));
    s.deviation("measures.qutrit_negativity_oracle", qutrit_dev, 1e-8, "cubic-root form vs partial transpose");

    std::size_t threshold_failures = 0;
    for (double n : {0.3, 1.0, 2.0}) {
        const double thr = entanglement_threshold_singlet(n);
        if (!(concurrence(stationary_qubit(WernerCase::singlet, thr + 1e-4, n)) > 0.0)) ++threshold_failures;
        if (!(concurrence(stationary_qubit(WernerCase::singlet, thr - 1e-4, n)) == 0.0)) ++threshold_failures;
    }
    s.count("measures.entanglement_threshold_singlet", threshold_failures, "r = threshold +- 1e-4, N in {0.3, 1, 2}");

    std::mt19937_64 rng(0x5eed0003);
    std::vector<DensityMatrix> randoms;
    for (int k = 0; k < 1000; ++k) randoms.push_back(random_density(rng, kTwoQubits, 1 + k % 4));
    const auto bounds = map_indexed(
        randoms.size(),
        [&](std::size_t i) {
            const auto& rho = randoms[i];
            const double c = concurrence(rho), b = chsh_max(rho), ne = negativity(rho);
            const double violation = std::max({b - 2.0 * std::numbers::sqrt2, -b, c - 1.0, -c, ne - 1.0, -ne, 0.0});
            const bool c_pos = c > 1e-9, n_pos = ne > 1e-9;
            return std::pair{violation, c_pos != n_pos};
        },
        s.exec());
    double bound_violation = 0.0;
    std::size_t ppt_mismatch = 0;
    for (const auto& [v, mismatch] : bounds) {
        bound_violation = std::max(bound_violation, v);
        if (mismatch) ++ppt_mismatch;
    }
    s.deviation("measures.random_state_bounds", bound_violation, 1e-9, "Tsirelson, C in [0,1], N in [0,1]");
    s.count("measures.ppt_concurrence_consistency", ppt_mismatch, "C > 1e-9 iff N > 1e-9 on 1000 random states");

    double mono = 0.0;
    const auto rs = linspace(0.0, 1.0, 101);
    const auto ns = linspace(0.0, 3.0, 101);
    for (double n : ns)
        for (std::size_t k = 1; k < rs.size(); ++k) {
            mono = std::max(mono, analytic_concurrence(WernerCase::singlet, rs[k - 1], n) -
                                      analytic_concurrence(WernerCase::singlet, rs[k], n));
            mono = std::max(mono, analytic_concurrence(WernerCase::triplet, rs[k], n) -
                                      analytic_concurrence(WernerCase::triplet, rs[k - 1], n));
        }
    for (double r : rs)
        for (std::size_t k = 1; k < ns.size(); ++k)
            mono = std::max(mono, analytic_concurrence(WernerCase::triplet, r, ns[k]) -
                                      analytic_concurrence(WernerCase::triplet, r, ns[k - 1]));
    s.deviation("measures.concurrence_monotonicity", mono, 1e-12, "largest wrong-direction step");

    std::size_t crossing_failures = 0;
    for (double n : {0.0, 0.5, 1.0}) {
        const double thr = bell_violation_threshold(n);
        if (!(chsh_max(stationary_qubit(WernerCase::singlet, thr + 1e-3, n)) > 2.0)) ++crossing_failures;
        if (!(chsh_max(stationary_qubit(WernerCase::singlet, thr - 1e-3, n)) <= 2.0)) ++crossing_failures;
    }
    s.count("measures.bell_threshold_crossing", crossing_failures, "N in {0, 0.5, 1}");
    s.deviation("measures.bell_threshold_zero_temperature",
                std::abs(bell_violation_threshold(0.0) - (2.0 * std::numbers::sqrt2 - 1.0) / 3.0), 1e-12);
    s.deviation("measures.bell_threshold_high_temperature",
                std::abs(bell_violation_threshold(1e6) - std::numbers::sqrt2 / 2.0), 1e-9);

    double case2 = 0.0;
    for (double r : rs)
        for (double n : ns) case2 = std::max(case2, analytic_chsh(WernerCase::triplet, r, n) - 2.0);
    s.deviation("measures.triplet_no_violation", std::max(0.0, case2), 1e-12, "max(B - 2) over the triplet grid");

    // Zero temperature: rho = C|Phi-><Phi-| + (1-C)|00><00| with C = (1+3r)/4.
    double mems = 0.0;
    for (double r : {5.0 / 9.0, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        const auto rho = stationary_qubit(WernerCase::singlet, r, 0.0);
        const double c = (1.0 + 3.0 * r) / 4.0;
        mems = std::max(mems, std::abs(linear_entropy(rho) - 8.0 / 3.0 * c * (1.0 - c)));
        mems = std::max(mems, std::abs(concurrence(rho) - c));
        auto ev = hermitian_eigenvalues(rho.matrix());
        std::array<double, 4> expect{0.0, 0.0, std::min(c, 1.0 - c), std::max(c, 1.0 - c)};
        for (int k = 0; k < 4; ++k) mems = std::max(mems, std::abs(ev[k] - expect[k]));
    }
    s.deviation("measures.zero_temperature_rank_two", mems, 1e-10, "S_L = 8/3 C(1-C), spectrum {C, 1-C, 0, 0}");

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t enhancement_mismatch = 0, excluded = 0;
    for (int k = 0; k < 500; ++k) {
        const double r = unit(rng), n = 3.0 * unit(rng);
        const double f = werner_singlet_fraction(r, WernerCase::singlet);
        const double n2 = n * n;
        const std::array<double, 4> edges{1.0, 1.0 / 6.0, (3 * n2 + 3 * n) / (6 * n2 + 6 * n + 1),
                                          (9 * n2 + 9 * n + 2) / (36 * n2 + 36 * n + 14)};
        bool near_edge = false;
        for (double e : edges) near_edge = near_edge || std::abs(f - e) < 1e-6;
        if (near_edge) {
            ++excluded;
            continue;
        }
        if ((concurrence_increment(WernerCase::singlet, r, n) > 0.0) != enhancement_predicate(f, n)) {
            ++enhancement_mismatch;
        }
    }
    s.count("measures.enhancement_region", enhancement_mismatch, std::to_string(excluded) + " boundary samples skipped");
}

// ---------------------------------------------------------------- distillation

void check_distillation(Suite& s) {
    double prob = 0.0, coeff = 0.0;
    std::size_t not_npt = 0;
    const auto etas = linspace(0.5, 50.0, 20);
    const auto singlet = bell_vector(BellSign::minus);
    for (double eta : etas) {
        const auto out = project_to_qubit_subspace(qutrit_stationary_werner(eta));
        prob = std::max(prob, std::abs(out.probability - (68.0 * eta - 7.0) / (72.0 * eta - 9.0)));
        const double norm = 68.0 * eta - 7.0;
        ComplexMatrix expected = ComplexMatrix::outer(singlet) * ((36.0 * eta + 9.0) / norm);
        expected(qubit_index(1, 1), qubit_index(1, 1)) += (2.0 * eta - 1.0) / norm;
        expected(qubit_index(0, 0), qubit_index(0, 0)) += (30.0 * eta - 15.0) / norm;
        coeff = std::max(coeff, frobenius_distance(out.state.matrix(), expected));
        if (!is_npt(out.state)) ++not_npt;
    }
    s.deviation("distillation.projection_probability", prob, 1e-12, "(68 eta - 7)/(72 eta - 9), 20 values of eta");
    s.deviation("distillation.projected_coefficients", coeff, 1e-12);
    s.count("distillation.projected_npt", not_npt);
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Suite suite(opts);
    check_linalg(suite);
    check_states(suite);
    check_dynamics(suite);
    check_measures(suite);
    check_distillation(suite);
    VerifyReport report;
    report.checks = suite.take();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        if (!c.passed) ++failed;
        std::ostringstream line;
        line << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(44) << c.name << std::right
             << " max_dev=" << std::setprecision(3) << std::scientific << c.deviation << " tol=" << c.tolerance;
        if (!c.detail.empty()) line << "  (" << c.detail << ")";
        os << line.str() << '\n';
    }
    os << (failed == 0 ? "all " : "") << report.checks.size() - failed << "/" << report.checks.size()
       << " checks passed in " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
}

}  // namespace colldecay
