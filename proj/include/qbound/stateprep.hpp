#pragma once

#include <array>

#include "qbound/matrix.hpp"
#include "qbound/state.hpp"

namespace qbound {

/// Axis-angle parameters of a single-qubit rotation: rotation angle omega
/// about the axis n = (sin theta cos phi, sin theta sin phi, cos theta).
struct Su2Params {
    double omega = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// exp(i omega/2 n.sigma) = cos(omega/2) I + i sin(omega/2) n.sigma.
ComplexMatrix su2(const Su2Params& p);

/// (u1 (x) u2) applied to a state; u1, u2 must be 2x2 unitaries (throws
/// NotUnitary). The result is returned in the input state's basis.
TwoQubitState apply_local(const ComplexMatrix& u1, const ComplexMatrix& u2,
                          const TwoQubitState& s);

/// Transmission angles and phases of a four-port beam-splitter cascade.
struct MultiportParams {
    std::array<double, 3> omega{};
    std::array<double, 3> phi{};
};

/// Output amplitudes of the cascade:
/// (e^{-i phi1} cos w1,
///  -e^{-i phi2} cos w2 sin w1,
///  e^{-i phi3} cos w3 sin w2 sin w1,
///  -sin w3 sin w2 sin w1).
std::array<cplx, 4> multiport_forward(const MultiportParams& p);

/// Recover cascade parameters for a real unit-norm target (norm within 1e-10,
/// throws NotNormalized) by triangular back-substitution. omega1 and omega2
/// take the arccos branch [0, pi]; omega3 carries the sign of the last
/// component and lies in (-pi, pi]. All phases come out zero. When a sine
/// prefactor vanishes the remaining angles are free and returned as zero;
/// if components remain that the vanished prefactor should have produced,
/// DegenerateTarget is thrown.
MultiportParams multiport_solve(const std::array<double, 4>& target);

}  // namespace qbound
