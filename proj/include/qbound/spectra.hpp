#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qbound/matrix.hpp"
#include "qbound/state.hpp"

namespace qbound {

/// Closed-form spectrum of build_o22(alpha, beta, gamma, delta):
///   lambda = ((+-)sqrt(1 (+-) sin(alpha-beta) sin(gamma-delta)) - 1) / 2
/// over all four sign choices, sorted descending.
std::array<double, 4> o22_eigenvalues(double alpha, double beta, double gamma, double delta);

/// Eigenvectors of build_o22 in the Bell basis, aligned with the descending
/// eigenvalues. The generic closed form places two eigenvectors in
/// span{psi+, phi-} and two in span{phi+, psi-}; when either block's coupling
/// denominator falls below 1e-8 the result falls back to the numeric
/// eigensolver and closed_form is false.
struct O22Eigensystem {
    std::array<double, 4> values{};
    std::array<TwoQubitState, 4> states{};
    bool closed_form = true;
};

O22Eigensystem o22_eigenvectors(double alpha, double beta, double gamma, double delta);

/// Maximal eigenvalue of a Hermitian operator: the relevant bound for the
/// violation of an upper-bounded inequality.
double norm_bound(const ComplexMatrix& m);

struct SweepPoint {
    double theta = 0.0;
    std::array<double, 4> eigenvalues{};   // descending
    double max_entanglement = 0.0;         // concurrence of the top eigenvector
};

/// Spectrum of the symmetric m-setting operator on a uniform theta grid
/// (steps >= 2 points, endpoints included). Throws InvalidRange.
std::vector<SweepPoint> sweep(int m, double theta_min, double theta_max, int steps);

struct MaxViolation {
    double theta_star = 0.0;
    double value = 0.0;
    TwoQubitState state;   // top eigenvector at the optimum, Bell basis
};

/// Maximize the top eigenvalue of the symmetric m-setting operator over theta.
/// A 512-point pre-scan of the bracket selects the best sub-interval (the
/// curves are not unimodal for every m), which golden-section search then
/// refines to |delta theta| <= 1e-10. Throws InvalidRange on an empty bracket.
MaxViolation max_violation(int m, std::pair<double, double> bracket);

/// Concurrence of a pure two-qubit state: 2 |x00 x11 - x01 x10| over the
/// computational amplitudes. 1 for maximally entangled states, 0 for product
/// states. Throws NotNormalized.
double concurrence(const TwoQubitState& s);

/// ((sqrt((3 - cos(4 theta)) / 2) - 1) / 2: the top o22 eigenvalue along the
/// one-parameter family (0, 2 theta, theta, 3 theta).
double staggered_family_bound(double theta);

struct O22GlobalMax {
    std::array<double, 4> angles{};
    double value = 0.0;
    double scan_max = 0.0;   // best value seen on the raw grid, before refinement
};

/// Maximize the closed-form o22 spectrum over all four angles: a full
/// grid^4 scan over [-pi, pi)^4 followed by cyclic coordinate golden-section
/// refinement.
O22GlobalMax o22_global_max(int grid);

}  // namespace qbound
