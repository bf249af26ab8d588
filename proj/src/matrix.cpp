#include "qbound/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim != b.dim) {
        throw DimMismatch("matrix dimensions differ: " + std::to_string(a.dim) +
                          " vs " + std::to_string(b.dim));
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim);
    for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] = a.entries[k] + b.entries[k];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim);
    for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] = a.entries[k] - b.entries[k];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r(a.dim);
    for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] = s * a.entries[k];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx(s, 0.0) * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < b.dim; ++k)
                for (int l = 0; l < b.dim; ++l)
                    r(i * b.dim + k, j * b.dim + l) = aij * b(k, l);
        }
    return r;
}

cplx trace(const ComplexMatrix& a) {
    cplx t{};
    for (int i = 0; i < a.dim; ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& z : a.entries) s += std::norm(z);
    return std::sqrt(s);
}

double hermiticity_error(const ComplexMatrix& a) {
    double worst = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

double unitarity_error(const ComplexMatrix& a) {
    const ComplexMatrix g = adjoint(a) * a;
    double worst = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? cplx{1.0} : cplx{})));
    return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) { return hermiticity_error(a) <= tol; }

bool is_unitary(const ComplexMatrix& a, double tol) { return unitarity_error(a) <= tol; }

ComplexMatrix conjugate_by(const ComplexMatrix& m, const ComplexMatrix& basis) {
    require_same_dim(m, basis);
    if (!is_unitary(basis, 1e-10)) {
        throw NotUnitary("conjugate_by: basis is not unitary");
    }
    return adjoint(basis) * m * basis;
}

}  // namespace qbound
