#include "qbound/operators.hpp"

#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

AngleSetup symmetric_setup(int m, double theta) {
    if (m < 2) throw InvalidM("symmetric_setup: need at least two settings per side");
    AngleSetup s;
    s.left.reserve(m);
    for (int k = 0; k < m; ++k) s.left.push_back(k * theta);
    s.right = s.left;
    return s;
}

ComplexMatrix sigma(double theta) {
    ComplexMatrix m(2);
    m(0, 0) = std::cos(theta);
    m(0, 1) = std::sin(theta);
    m(1, 0) = std::sin(theta);
    m(1, 1) = -std::cos(theta);
    return m;
}

namespace {

ComplexMatrix outcome_projector(double theta) {
    ComplexMatrix p = sigma(theta);
    p(0, 0) = 0.5 * (1.0 + p(0, 0));
    p(0, 1) = 0.5 * p(0, 1);
    p(1, 0) = 0.5 * p(1, 0);
    p(1, 1) = 0.5 * (1.0 + p(1, 1));
    return p;
}

}  // namespace

ComplexMatrix q_single(Side side, double theta) {
    const ComplexMatrix p = outcome_projector(theta);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return side == Side::Left ? kron(p, id) : kron(id, p);
}

ComplexMatrix q_joint(double theta_left, double theta_right) {
    return kron(outcome_projector(theta_left), outcome_projector(theta_right));
}

ComplexMatrix build_o22(double alpha, double beta, double gamma, double delta) {
    return q_joint(alpha, gamma) + q_joint(alpha, delta) + q_joint(beta, gamma) -
           q_joint(beta, delta) - q_single(Side::Left, alpha) - q_single(Side::Right, gamma);
}

InequalityCoeffs imm_coeffs(int m) {
    if (m < 2) throw InvalidM("imm_coeffs: m must be at least 2");
    InequalityCoeffs c;
    c.m = m;
    c.joint.assign(static_cast<std::size_t>(m) * m, 0);
    c.marg_left.assign(m, 0);
    c.marg_right.assign(m, 0);
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= m - j + 1; ++i) c.joint_at(i - 1, j - 1) += 1;
    for (int i = 1; i <= m - 1; ++i) c.joint_at(i, m - i) -= 1;
    c.marg_left[0] = -1;
    for (int i = 1; i <= m; ++i) c.marg_right[i - 1] = -(m - i);
    c.upper = 0;
    if (m == 2) c.lower = -1;
    return c;
}

ComplexMatrix build_omm(const InequalityCoeffs& coeffs, const AngleSetup& setup) {
    const int m = coeffs.m;
    if (static_cast<int>(setup.left.size()) != m || static_cast<int>(setup.right.size()) != m) {
        throw DimMismatch("build_omm: angle lists must have length m");
    }
    ComplexMatrix o(4);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int w = coeffs.joint_at(i, j);
            if (w != 0) o = o + static_cast<double>(w) * q_joint(setup.left[i], setup.right[j]);
        }
    for (int i = 0; i < m; ++i)
        if (coeffs.marg_left[i] != 0)
            o = o + static_cast<double>(coeffs.marg_left[i]) * q_single(Side::Left, setup.left[i]);
    for (int j = 0; j < m; ++j)
        if (coeffs.marg_right[j] != 0)
            o = o + static_cast<double>(coeffs.marg_right[j]) * q_single(Side::Right, setup.right[j]);
    return o;
}

ComplexMatrix o33_explicit(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double s2 = std::sin(2.0 * theta);
    const double c2 = std::cos(2.0 * theta);
    const double s3 = std::sin(3.0 * theta);
    const double c3 = std::cos(3.0 * theta);

    ComplexMatrix m(4);
    m(0, 0) = -s * s;
    m(1, 1) = (-5.0 - 2.0 * c - 3.0 * c2 + 2.0 * c3) / 4.0;
    m(1, 2) = (1.0 + c) / 2.0;
    m(1, 3) = (2.0 * s + 3.0 * s2 - 2.0 * s3) / 4.0;
    m(2, 2) = -(3.0 + c2) / 2.0;
    m(2, 3) = -s / 2.0;
    m(3, 3) = s * s * (4.0 * c - 3.0) / 2.0;
    m(2, 1) = m(1, 2);
    m(3, 1) = m(1, 3);
    m(3, 2) = m(2, 3);
    return m;
}

const ComplexMatrix& bell_basis() {
    static const ComplexMatrix b = [] {
        const double r = 1.0 / std::sqrt(2.0);
        ComplexMatrix m(4);
        m(0, 0) = r;            // |phi+> = (|00> + |11>)/sqrt2
        m(3, 0) = r;
        m(1, 1) = r;            // |psi+> = (|01> + |10>)/sqrt2
        m(2, 1) = r;
        m(1, 2) = r;            // |psi-> = (|01> - |10>)/sqrt2
        m(2, 2) = -r;
        m(0, 3) = r;            // |phi-> = (|00> - |11>)/sqrt2
        m(3, 3) = -r;
        return m;
    }();
    return b;
}

ComplexMatrix to_bell_basis(const ComplexMatrix& m) { return conjugate_by(m, bell_basis()); }

}  // namespace qbound
