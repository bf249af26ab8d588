#pragma once

#include <complex>
#include <vector>

namespace qbound {

using cplx = std::complex<double>;

/// Dense square complex matrix in row-major order. All operators handled by
/// this library live in dimension <= 8, so no attempt is made at sparsity or
/// blocking; everything is plain value-semantic data.
struct ComplexMatrix {
    int dim = 0;
    std::vector<cplx> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : dim(n), entries(static_cast<std::size_t>(n) * n) {}

    static ComplexMatrix identity(int n);

    cplx& operator()(int i, int j) {
        return entries[static_cast<std::size_t>(i) * dim + j];
    }
    const cplx& operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * dim + j];
    }
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// max_ij |a(i,j) - conj(a(j,i))|
double hermiticity_error(const ComplexMatrix& a);
/// max_ij |(a^dagger a - I)(i,j)|
double unitarity_error(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-10);

/// basis^dagger * m * basis. Throws NotUnitary / DimMismatch.
ComplexMatrix conjugate_by(const ComplexMatrix& m, const ComplexMatrix& basis);

}  // namespace qbound
