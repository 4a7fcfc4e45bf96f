#pragma once

#include <random>

#include "colldecay/density.hpp"

namespace colldecay {

/// Complex Ginibre matrix with independent standard normal real and
/// imaginary parts.
ComplexMatrix random_ginibre(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// (G + G^dagger)/2 for a Ginibre G.
ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n);

/// G G^dagger / Tr(G G^dagger) with G of shape n x rank (rank 0 = full rank).
DensityMatrix random_density(std::mt19937_64& rng, BipartiteDims dims, std::size_t rank = 0);

}  // namespace colldecay
