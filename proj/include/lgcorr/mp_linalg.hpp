#ifndef LGCORR_MP_LINALG_HPP
#define LGCORR_MP_LINALG_HPP

#include "lgcorr/mp_complex.hpp"

#include <vector>

namespace lgcorr {

// Dense column-major complex matrix at working precision; sized for the small
// fundamental-system problems here (tens of rows/columns).
struct CMatrix {
    long rows = 0, cols = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    CMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    Complex& operator()(long i, long j) { return a[static_cast<size_t>(j * rows + i)]; }
    const Complex& operator()(long i, long j) const
    {
        return a[static_cast<size_t>(j * rows + i)];
    }
};

CMatrix matmul(const CMatrix& A, const CMatrix& B);
CMatrix adjoint(const CMatrix& A);
Real frobenius_norm(const CMatrix& A);

// Least squares min |A x - b| via Householder QR (A.rows >= A.cols).
// b may have several right-hand sides as columns; returns cols(A) x cols(b).
CMatrix least_squares(CMatrix A, CMatrix b);

// Singular values, descending, via one-sided Jacobi.
std::vector<Real> singular_values(CMatrix A);

} // namespace lgcorr

#endif
