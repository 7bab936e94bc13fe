#pragma once

#include <vector>

#include "cgq/complex_matrix.hpp"

namespace cgq {

struct EigResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector for values[k]
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Sweeps until the off-diagonal Frobenius mass drops below
// 1e-14 * max(1, ||A||_F), capped at 100 sweeps. Plenty for the small
// matrices this project works with (dim <= 16).
EigResult herm_eig(const ComplexMatrix& m);

} // namespace cgq
