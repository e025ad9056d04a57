#pragma once

#include <random>

#include "qps/linalg.hpp"

namespace qps {

// Seeded generators used by the verification suite and tests. Deterministic
// for a fixed seed.
ComplexMatrix random_matrix(int dim, std::mt19937_64& rng);
ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng);
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);        // QR of a Ginibre matrix
ComplexMatrix random_density_matrix(int dim, std::mt19937_64& rng); // G G' / Tr
ComplexVector random_state(int dim, std::mt19937_64& rng);

}  // namespace qps
