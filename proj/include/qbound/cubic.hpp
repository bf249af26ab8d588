#pragma once

#include <array>

#include "qbound/matrix.hpp"

namespace qbound {

/// Coefficients of the monic cubic  lambda^3 + b lambda^2 + c lambda + d.
struct CubicCoeffs {
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// Characteristic-polynomial coefficients of a 3x3 Hermitian block:
/// b = -tr(o), c = (tr(o)^2 - tr(o^2))/2, d = -det(o).
CubicCoeffs cubic_from_block(const ComplexMatrix& block);

/// All three (real) roots by the trigonometric Cardano method, sorted
/// descending. Assumes the coefficients come from a Hermitian matrix, so the
/// discriminant corresponds to three real roots; cos(xi) is clamped to [-1,1]
/// to absorb roundoff near degeneracies. When u = (3c - b^2)/9 vanishes
/// (|u| <= 1e-14) the cubic has the triple root -b/3, returned three times.
std::array<double, 3> cardano_roots(const CubicCoeffs& coeffs);

}  // namespace qbound
