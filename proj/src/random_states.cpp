#include "colldecay/random_states.hpp"

namespace colldecay {

ComplexMatrix random_ginibre(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal;
    ComplexMatrix g(rows, cols);
    for (auto& z : g.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = Complex(re, im);
    }
    return g;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    const ComplexMatrix g = random_ginibre(rng, n, n);
    return 0.5 * (g + g.dagger());
}

DensityMatrix random_density(std::mt19937_64& rng, BipartiteDims dims, std::size_t rank) {
    const std::size_t n = dims.total();
    const ComplexMatrix g = random_ginibre(rng, n, rank == 0 ? n : rank);
    ComplexMatrix m = g * g.dagger();
    m *= 1.0 / m.trace().real();
    // exact Hermitian symmetry
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
    }
    return DensityMatrix(std::move(m), dims);
}

}  // namespace colldecay
