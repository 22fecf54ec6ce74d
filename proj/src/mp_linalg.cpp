#include "lgcorr/mp_linalg.hpp"

namespace lgcorr {

CMatrix matmul(const CMatrix& A, const CMatrix& B)
{
    if (A.cols != B.rows) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix C(A.rows, B.cols);
    for (long j = 0; j < B.cols; ++j)
        for (long k = 0; k < A.cols; ++k) {
            const Complex& b = B(k, j);
            if (b.is_zero()) continue;
            for (long i = 0; i < A.rows; ++i) C(i, j) += A(i, k) * b;
        }
    return C;
}

CMatrix adjoint(const CMatrix& A)
{
    CMatrix T(A.cols, A.rows);
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) T(j, i) = conj(A(i, j));
    return T;
}

Real frobenius_norm(const CMatrix& A)
{
    Real s(0);
    for (const auto& z : A.a) s += z.re * z.re + z.im * z.im;
    return sqrt(s);
}

CMatrix least_squares(CMatrix A, CMatrix b)
{
    const long m = A.rows, n = A.cols;
    if (b.rows != m) throw std::invalid_argument("least_squares: rhs shape mismatch");
    if (m < n) throw std::invalid_argument("least_squares: underdetermined system");

    for (long k = 0; k < n; ++k) {
        // Householder vector for column k
        Real norm(0);
        for (long i = k; i < m; ++i) {
            norm += A(i, k).re * A(i, k).re + A(i, k).im * A(i, k).im;
        }
        norm = sqrt(norm);
        if (norm == 0) throw std::runtime_error("least_squares: rank-deficient matrix");
        Complex akk = A(k, k);
        Real akk_abs = abs(akk);
        Complex phase = akk_abs == 0 ? Complex(Real(1)) : akk / akk_abs;
        Complex alpha = -(phase * norm);
        // v = x - alpha e_k
        std::vector<Complex> v(static_cast<size_t>(m - k));
        v[0] = akk - alpha;
        for (long i = k + 1; i < m; ++i) v[static_cast<size_t>(i - k)] = A(i, k);
        Real vnorm2(0);
        for (const auto& z : v) vnorm2 += z.re * z.re + z.im * z.im;
        if (vnorm2 == 0) continue;

        auto reflect = [&](CMatrix& M, long col) {
            Complex dot(Real(0));
            for (long i = k; i < m; ++i) dot += conj(v[static_cast<size_t>(i - k)]) * M(i, col);
            Complex f = dot * (Real(2) / vnorm2);
            for (long i = k; i < m; ++i) M(i, col) -= f * v[static_cast<size_t>(i - k)];
        };
        for (long j = k; j < n; ++j) reflect(A, j);
        for (long j = 0; j < b.cols; ++j) reflect(b, j);
    }

    CMatrix x(n, b.cols);
    for (long j = 0; j < b.cols; ++j) {
        for (long i = n - 1; i >= 0; --i) {
            Complex s = b(i, j);
            for (long k2 = i + 1; k2 < n; ++k2) s -= A(i, k2) * x(k2, j);
            x(i, j) = s / A(i, i);
        }
    }
    return x;
}

std::vector<Real> singular_values(CMatrix A)
{
    if (A.rows < A.cols) A = adjoint(A);
    const long m = A.rows, n = A.cols;
    const Real eps = ldexp(Real(1), -static_cast<long>(precision_bits()) + 6);

    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (long p = 0; p < n - 1; ++p) {
            for (long q = p + 1; q < n; ++q) {
                Real app(0), aqq(0);
                Complex apq(Real(0));
                for (long i = 0; i < m; ++i) {
                    app += A(i, p).re * A(i, p).re + A(i, p).im * A(i, p).im;
                    aqq += A(i, q).re * A(i, q).re + A(i, q).im * A(i, q).im;
                    apq += conj(A(i, p)) * A(i, q);
                }
                Real off = abs(apq);
                if (off <= sqrt(app * aqq) * eps) continue;
                rotated = true;
                // complex Jacobi rotation diagonalizing [[app, apq],[conj, aqq]]
                Complex phase = apq / off;
                Real tau = (aqq - app) / (2 * off);
                Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                         (boost::multiprecision::abs(tau) + sqrt(1 + tau * tau));
                Real c = 1 / sqrt(1 + t * t);
                Real s = c * t;
                for (long i = 0; i < m; ++i) {
                    Complex ap = A(i, p), aq = A(i, q);
                    A(i, p) = ap * c - aq * (conj(phase) * s);
                    A(i, q) = ap * (phase * s) + aq * c;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<Real> sv;
    sv.reserve(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
        Real s(0);
        for (long i = 0; i < m; ++i) s += A(i, j).re * A(i, j).re + A(i, j).im * A(i, j).im;
        sv.push_back(sqrt(s));
    }
    std::sort(sv.begin(), sv.end(), std::greater<Real>());
    return sv;
}

} // namespace lgcorr
