#include "colldecay/distillation.hpp"

#include <array>
#include <stdexcept>

#include "colldecay/states.hpp"

namespace colldecay {

namespace {

// Qutrit label 1 -> qubit |0>, label 2 -> qubit |1>.
constexpr int qubit_label(int qutrit_label) { return qutrit_label == 2 ? 1 : 0; }

}  // namespace

ProjectionOutcome project_to_qubit_subspace(const DensityMatrix& rho) {
    if (rho.dims() != kTwoQutrits) throw std::invalid_argument("project_to_qubit_subspace: requires a two-qutrit state");

    struct Label {
        std::size_t qutrit;
        std::size_t qubit;
    };
    std::array<Label, 4> kept{};
    std::size_t n = 0;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            kept[n++] = {qutrit_index(i, j), qubit_index(qubit_label(i), qubit_label(j))};

    ComplexMatrix projected(4, 4);
    double probability = 0.0;
    for (const auto& row : kept) {
        probability += rho.matrix()(row.qutrit, row.qutrit).real();
        for (const auto& col : kept) projected(row.qubit, col.qubit) = rho.matrix()(row.qutrit, col.qutrit);
    }
    if (!(probability >= 1e-12)) throw std::runtime_error("projection annihilates state");
    projected *= 1.0 / probability;
    return {DensityMatrix(std::move(projected), kTwoQubits), probability};
}

}  // namespace colldecay
