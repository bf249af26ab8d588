#include "qbound/state.hpp"

#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

double TwoQubitState::norm() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

TwoQubitState TwoQubitState::in_basis(StateBasis target) const {
    if (target == basis) return *this;
    // The Bell change-of-basis matrix is real, symmetric and orthogonal, so
    // the same map converts in either direction.
    const double r = 1.0 / std::sqrt(2.0);
    const auto& a = amplitudes;
    TwoQubitState out;
    out.basis = target;
    out.amplitudes = {r * (a[0] + a[3]), r * (a[1] + a[2]),
                      r * (a[1] - a[2]), r * (a[0] - a[3])};
    return out;
}

TwoQubitState TwoQubitState::normalized() const {
    const double n = norm();
    if (n < 1e-300) throw NotNormalized("normalized: zero state");
    TwoQubitState out = *this;
    for (cplx& a : out.amplitudes) a /= n;
    return out;
}

cplx overlap(const TwoQubitState& a, const TwoQubitState& b) {
    const TwoQubitState ac = a.in_basis(StateBasis::Computational);
    const TwoQubitState bc = b.in_basis(StateBasis::Computational);
    cplx s{};
    for (int k = 0; k < 4; ++k) s += std::conj(ac.amplitudes[k]) * bc.amplitudes[k];
    return s;
}

TwoQubitState phi_plus() { return TwoQubitState{{1.0, 0.0, 0.0, 0.0}, StateBasis::Bell}; }
TwoQubitState psi_plus() { return TwoQubitState{{0.0, 1.0, 0.0, 0.0}, StateBasis::Bell}; }
TwoQubitState psi_minus() { return TwoQubitState{{0.0, 0.0, 1.0, 0.0}, StateBasis::Bell}; }
TwoQubitState phi_minus() { return TwoQubitState{{0.0, 0.0, 0.0, 1.0}, StateBasis::Bell}; }

}  // namespace qbound
