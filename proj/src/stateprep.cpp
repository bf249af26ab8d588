#include "qbound/stateprep.hpp"

#include <algorithm>
#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

ComplexMatrix su2(const Su2Params& p) {
    const double nx = std::sin(p.theta) * std::cos(p.phi);
    const double ny = std::sin(p.theta) * std::sin(p.phi);
    const double nz = std::cos(p.theta);
    const double c = std::cos(0.5 * p.omega);
    const double s = std::sin(0.5 * p.omega);

    ComplexMatrix u(2);
    u(0, 0) = cplx(c, s * nz);
    u(0, 1) = cplx(s * ny, s * nx);
    u(1, 0) = cplx(-s * ny, s * nx);
    u(1, 1) = cplx(c, -s * nz);
    return u;
}

TwoQubitState apply_local(const ComplexMatrix& u1, const ComplexMatrix& u2,
                          const TwoQubitState& s) {
    if (u1.dim != 2 || u2.dim != 2) {
        throw DimMismatch("apply_local: single-qubit unitaries must be 2x2");
    }
    if (!is_unitary(u1, 1e-10) || !is_unitary(u2, 1e-10)) {
        throw NotUnitary("apply_local: operators must be unitary");
    }
    const TwoQubitState in = s.in_basis(StateBasis::Computational);
    const ComplexMatrix u = kron(u1, u2);
    TwoQubitState out;
    out.basis = StateBasis::Computational;
    for (int i = 0; i < 4; ++i) {
        cplx acc{};
        for (int j = 0; j < 4; ++j) acc += u(i, j) * in.amplitudes[j];
        out.amplitudes[i] = acc;
    }
    return out.in_basis(s.basis);
}

std::array<cplx, 4> multiport_forward(const MultiportParams& p) {
    const double s1 = std::sin(p.omega[0]);
    const double s2 = std::sin(p.omega[1]);
    return {
        std::exp(cplx(0.0, -p.phi[0])) * std::cos(p.omega[0]),
        -std::exp(cplx(0.0, -p.phi[1])) * std::cos(p.omega[1]) * s1,
        std::exp(cplx(0.0, -p.phi[2])) * std::cos(p.omega[2]) * s2 * s1,
        cplx(-std::sin(p.omega[2]) * s2 * s1, 0.0),
    };
}

MultiportParams multiport_solve(const std::array<double, 4>& target) {
    double norm2 = 0.0;
    for (const double t : target) norm2 += t * t;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
        throw NotNormalized("multiport_solve: target must have unit norm");
    }

    const auto residual_above = [&](int from) {
        double worst = 0.0;
        for (int k = from; k < 4; ++k) worst = std::max(worst, std::abs(target[k]));
        return worst;
    };

    MultiportParams p;
    p.omega[0] = std::acos(std::clamp(target[0], -1.0, 1.0));
    const double s1 = std::sin(p.omega[0]);
    if (s1 < 1e-12) {
        if (residual_above(1) > 1e-6) {
            throw DegenerateTarget("multiport_solve: sin(omega1) vanishes but later components do not");
        }
        return p;
    }

    p.omega[1] = std::acos(std::clamp(-target[1] / s1, -1.0, 1.0));
    const double s21 = std::sin(p.omega[1]) * s1;
    if (s21 < 1e-12) {
        if (residual_above(2) > 1e-6) {
            throw DegenerateTarget("multiport_solve: sin(omega2) vanishes but later components do not");
        }
        return p;
    }

    p.omega[2] = std::atan2(-target[3], target[2]);
    return p;
}

}  // namespace qbound
