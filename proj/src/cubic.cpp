#include "qbound/cubic.hpp"

#include <algorithm>
#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

CubicCoeffs cubic_from_block(const ComplexMatrix& block) {
    if (block.dim != 3) {
        throw DimMismatch("cubic_from_block: expected a 3x3 block");
    }
    if (hermiticity_error(block) > 1e-10) {
        throw NotHermitian("cubic_from_block: block is not Hermitian");
    }
    const double tr = trace(block).real();
    const double tr2 = trace(block * block).real();
    const cplx det = block(0, 0) * (block(1, 1) * block(2, 2) - block(1, 2) * block(2, 1)) -
                     block(0, 1) * (block(1, 0) * block(2, 2) - block(1, 2) * block(2, 0)) +
                     block(0, 2) * (block(1, 0) * block(2, 1) - block(1, 1) * block(2, 0));
    return CubicCoeffs{-tr, 0.5 * (tr * tr - tr2), -det.real()};
}

std::array<double, 3> cardano_roots(const CubicCoeffs& coeffs) {
    const double b = coeffs.b;
    const double c = coeffs.c;
    const double d = coeffs.d;

    const double u = (3.0 * c - b * b) / 9.0;
    if (std::abs(u) <= 1e-14) {
        const double r = -b / 3.0;
        return {r, r, r};
    }

    double cos_xi = (9.0 * b * c - 2.0 * b * b * b - 27.0 * d) /
                    (54.0 * u * std::sqrt(std::abs(u)));
    cos_xi = std::clamp(cos_xi, -1.0, 1.0);
    const double xi = std::acos(cos_xi);

    const double su = std::sqrt(std::abs(u));
    const double co = std::cos(xi / 3.0);
    const double si = std::sin(xi / 3.0);
    const double shift = b / 3.0;
    std::array<double, 3> roots{
        -2.0 * su * co - shift,
        su * (co + std::sqrt(3.0) * si) - shift,
        su * (co - std::sqrt(3.0) * si) - shift,
    };
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

}  // namespace qbound
