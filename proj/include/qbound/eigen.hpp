#pragma once

#include <vector>

#include "qbound/matrix.hpp"

namespace qbound {

/// Eigenvalues sorted descending; eigenvector k is column k of `vectors`.
/// Vectors are orthonormal, and each has its first component of magnitude
/// above 1e-8 rotated to be real and positive.
struct Spectrum {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Full eigensystem of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Input must be Hermitian within 1e-10 (throws NotHermitian). Iterates until
/// the off-diagonal Frobenius mass drops below 1e-14 (relative to the matrix
/// scale), which for dimension <= 8 leaves residuals near machine precision.
Spectrum hermitian_eigen(const ComplexMatrix& m);

}  // namespace qbound
