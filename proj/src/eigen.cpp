#include "qbound/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

double offdiag_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

int first_large_component(const ComplexMatrix& v, int col) {
    for (int k = 0; k < v.dim; ++k)
        if (std::abs(v(k, col)) > 1e-8) return k;
    return v.dim;
}

}  // namespace

Spectrum hermitian_eigen(const ComplexMatrix& m) {
    if (hermiticity_error(m) > 1e-10) {
        throw NotHermitian("hermitian_eigen: input deviates from Hermitian symmetry");
    }
    const int n = m.dim;

    // Work on the symmetrized copy so the diagonal is exactly real.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = 1e-14 * std::max(1.0, frobenius_norm(a));
    int sweep = 0;
    while (offdiag_mass(a) > tol) {
        if (++sweep > 60) {
            throw ConvergenceFailure("hermitian_eigen: Jacobi sweeps did not converge");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Plane rotation in the (p,q) plane annihilating a(p,q):
                //   U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase), U(q,q)=c.
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                for (int k = 0; k < n; ++k) {  // columns: A <- A U, V <- V U
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
                for (int k = 0; k < n; ++k) {  // rows: A <- U^dagger A
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const double li = a(i, i).real();
        const double lj = a(j, j).real();
        if (li != lj) return li > lj;
        return first_large_component(v, i) < first_large_component(v, j);
    });

    Spectrum out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int c = 0; c < n; ++c) {
        const int src = order[c];
        out.values[c] = a(src, src).real();
        cplx phase{1.0};
        const int lead = first_large_component(v, src);
        if (lead < n) phase = std::conj(v(lead, src) / std::abs(v(lead, src)));
        for (int k = 0; k < n; ++k) out.vectors(k, c) = phase * v(k, src);
    }
    return out;
}

}  // namespace qbound
