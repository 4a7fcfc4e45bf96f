#pragma once

#include <variant>
#include <vector>

#include "colldecay/density.hpp"

namespace colldecay {

// Basis conventions.
//
// Two qubits: indices 0..3 are |11>, |10>, |01>, |00> (excited state first
// on each site), so single-site operators act in the (|1>, |0>) basis.
// Two qutrits: |i,j> with i, j in {1, 2, 3} sits at index 3(i-1) + (j-1);
// level 1 is the ground state.

/// Index of |a b> for qubit labels a, b in {0, 1}.
constexpr std::size_t qubit_index(int a, int b) { return static_cast<std::size_t>(2 * (1 - a) + (1 - b)); }
/// Index of |i, j> for qutrit labels i, j in {1, 2, 3}.
constexpr std::size_t qutrit_index(int i, int j) { return static_cast<std::size_t>(3 * (i - 1) + (j - 1)); }

enum class BellSign { plus, minus };

/// Which Bell state the initial Werner mixture is built on.
/// singlet: r|Phi-><Phi-| + (1-r)/4 I (the standard Werner state).
/// triplet: r|Phi+><Phi+| + (1-r)/4 I (the Werner-like state).
enum class WernerCase { singlet = 1, triplet = 2 };

/// (|10> +- |01>)/sqrt(2)
std::vector<Complex> bell_vector(BellSign sign);
DensityMatrix bell_state(BellSign sign);

/// Throws std::invalid_argument for r outside [0, 1].
DensityMatrix werner_qubit(double r, WernerCase which);

/// Tr(|Phi-><Phi-| rho_W): (1+3r)/4 for the singlet case, (1-r)/4 otherwise.
double werner_singlet_fraction(double r, WernerCase which);

/// (eta I - (eta+1)/3 SWAP) / (8 eta - 1). Requires finite eta >= 1/2.
DensityMatrix qutrit_werner(double eta);

/// I / (dA dB), for dA, dB in {2, 3}.
DensityMatrix maximally_mixed(BipartiteDims dims);

/// (|1,2> - |2,1>)/sqrt(2)
std::vector<Complex> qutrit_antisymmetric_a1();
/// (|3,1> + |1,3> - |2,2>)/sqrt(3)
std::vector<Complex> qutrit_symmetric_s1();

/// Populations and the |10><01| coherence of a two-qubit X state with
/// vanishing |11><00| coherence, which is the form of both stationary states.
struct XStateCoefficients {
    double p11 = 0.0;
    double p10 = 0.0;
    double p01 = 0.0;
    double p00 = 0.0;
    double coherence = 0.0;

    ComplexMatrix to_matrix() const;
};

/// 1 + 3N(N+1)
double thermal_factor(double n_mean);

/// Closed-form stationary coefficients reached from the Werner state of the
/// given case under collective thermal decay with mean occupation n_mean.
XStateCoefficients stationary_coefficients(WernerCase which, double r, double n_mean);

DensityMatrix stationary_qubit(WernerCase which, double r, double n_mean);

/// Stationary state of two qutrits relaxing from I/9 at zero temperature.
DensityMatrix qutrit_stationary_mixed();

/// Stationary state reached from qutrit_werner(eta). Requires finite eta >= 1/2.
DensityMatrix qutrit_stationary_werner(double eta);
/// eta -> infinity limit of qutrit_stationary_werner.
DensityMatrix qutrit_stationary_werner_limit();

/// Symbolic description of an analytic stationary state.
class StationarySpec {
public:
    struct Qubit {
        WernerCase which;
        double r;
        double n_mean;
    };
    struct QutritMixed {};
    struct QutritWerner {
        double eta;
    };
    struct QutritWernerLimit {};
    using Kind = std::variant<Qubit, QutritMixed, QutritWerner, QutritWernerLimit>;

    static StationarySpec qubit(WernerCase which, double r, double n_mean);
    static StationarySpec qutrit_mixed() { return StationarySpec(QutritMixed{}); }
    static StationarySpec qutrit_werner(double eta);
    static StationarySpec qutrit_werner_limit() { return StationarySpec(QutritWernerLimit{}); }

    const Kind& kind() const noexcept { return kind_; }
    BipartiteDims dims() const noexcept;
    DensityMatrix materialize() const;

private:
    explicit StationarySpec(Kind k) : kind_(k) {}
    Kind kind_;
};

}  // namespace colldecay
