#pragma once

#include "symphase/complex_matrix.hpp"

namespace symphase::linalg {

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, eigenvectors[.][i] <-> eigenvalues[i]
};

/// Hermitian eigendecomposition via cyclic Jacobi on the embedded 2d x 2d
/// real-symmetric form [[A, -B], [B, A]] of A + iB. Throws NonHermitianInput
/// when the Hermiticity deficit exceeds herm_tol.
EighResult eigh(const ComplexMatrix& a, double herm_tol = 1e-10);

}  // namespace symphase::linalg
