#pragma once

#include <optional>
#include <vector>

#include "qbound/matrix.hpp"

namespace qbound {

enum class Side { Left, Right };

/// Measurement angles (radians, x-z plane) for the left and right particle.
struct AngleSetup {
    std::vector<double> left;
    std::vector<double> right;
};

/// Both parties measure along {0, theta, 2 theta, ..., (m-1) theta}.
AngleSetup symmetric_setup(int m, double theta);

/// Integer coefficients of a Bell-type inequality on joint terms P(A_i B_j)
/// and marginals P(A_i), P(B_j), with its classical bounds. joint is m x m,
/// row-major, joint(i,j) multiplying P(A_{i+1} B_{j+1}).
struct InequalityCoeffs {
    int m = 0;
    std::vector<int> joint;
    std::vector<int> marg_left;
    std::vector<int> marg_right;
    int upper = 0;
    std::optional<int> lower;

    int joint_at(int i, int j) const { return joint[static_cast<std::size_t>(i) * m + j]; }
    int& joint_at(int i, int j) { return joint[static_cast<std::size_t>(i) * m + j]; }
};

/// Spin observable along the angle-theta direction in the x-z plane:
/// [[cos t, sin t], [sin t, -cos t]]. Hermitian, squares to the identity.
ComplexMatrix sigma(double theta);

/// Single-particle outcome projector lifted to the two-qubit space:
/// Left  -> (I + sigma(t))/2 (x) I,  Right -> I (x) (I + sigma(t))/2.
ComplexMatrix q_single(Side side, double theta);

/// Joint outcome projector (I + sigma(tL))/2 (x) (I + sigma(tR))/2.
ComplexMatrix q_joint(double theta_left, double theta_right);

/// The operator obtained from the Clauser-Horne expression
///   p13 + p14 + p23 - p24 - p1 - p3
/// by substituting the projectors above; alpha, beta are the left angles and
/// gamma, delta the right angles.
ComplexMatrix build_o22(double alpha, double beta, double gamma, double delta);

/// The I_mm inequality family (m settings per side, classical upper bound 0):
/// sum_{j=1..m} sum_{i=1..m-j+1} P(A_i B_j) - sum_{i=1..m-1} P(A_{i+1} B_{m-i+1})
/// - sum_i (m-i) P(B_i) - P(A_1) <= 0. m = 2 reproduces Clauser-Horne, whose
/// lower classical bound -1 is recorded too. Throws InvalidM for m < 2.
InequalityCoeffs imm_coeffs(int m);

/// Substitute projectors into an arbitrary coefficient list. Angle lists must
/// have length coeffs.m (throws DimMismatch). Result is Hermitian.
ComplexMatrix build_omm(const InequalityCoeffs& coeffs, const AngleSetup& setup);

/// Closed-form Bell-basis matrix of the m=3 operator for the symmetric setup
/// {0, theta, 2 theta}. Equal to
/// conjugate_by(build_omm(imm_coeffs(3), symmetric_setup(3, theta)), bell_basis()).
/// The top-left entry is the decoupled eigenvalue -sin^2(theta).
ComplexMatrix o33_explicit(double theta);

/// Change-of-basis unitary whose columns are |phi+>, |psi+>, |psi->, |phi->
/// over the computational basis |00>, |01>, |10>, |11>.
const ComplexMatrix& bell_basis();

/// conjugate_by(m, bell_basis())
ComplexMatrix to_bell_basis(const ComplexMatrix& m);

}  // namespace qbound
