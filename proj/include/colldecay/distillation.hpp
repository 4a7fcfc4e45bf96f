#pragma once

#include "colldecay/density.hpp"

namespace colldecay {

struct ProjectionOutcome {
    /// Two-qubit state on the surviving labels {1, 2} of each qutrit. Label 1
    /// (ground) maps to qubit |0> and label 2 to qubit |1>, so the result is
    /// in the standard two-qubit ordering and every qubit measure applies.
    DensityMatrix state;
    /// Tr(P rho P) with P = (|1><1| + |2><2|) (x) (|1><1| + |2><2|).
    double probability;
};

/// Local projection of a two-qutrit state onto the {1, 2} x {1, 2} subspace.
/// Throws std::invalid_argument for non-qutrit input and
/// std::runtime_error("projection annihilates state") when the success
/// probability is below 1e-12.
ProjectionOutcome project_to_qubit_subspace(const DensityMatrix& rho);

}  // namespace colldecay
