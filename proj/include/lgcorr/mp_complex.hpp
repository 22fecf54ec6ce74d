#ifndef LGCORR_MP_COMPLEX_HPP
#define LGCORR_MP_COMPLEX_HPP

#include "lgcorr/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace lgcorr {

using Real = boost::multiprecision::mpfr_float;

// Working precision for every numeric kernel.  mpfr's default precision is
// thread-local, so parallel regions must call apply_thread_precision() before
// touching Real values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();
void apply_thread_precision();

Real real_from_rat(const Rat& x);
Real pi_value();
Real euler_gamma_value();

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Rat& x) : re(real_from_rat(x)), im(0) {}
    explicit Complex(long x) : re(x), im(0) {}

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    friend Complex operator/(const Complex& a, const Complex& b)
    {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

    bool is_zero() const { return re == 0 && im == 0; }
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z); // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Real& p);
Complex polar(const Real& modulus, const Real& angle);
Complex unit_phase(const Rat& turns); // e^{2 pi i turns}

// Exact Bernoulli numbers B_0..B_n (cached).
const std::vector<Rat>& bernoulli_numbers(int n);

// Polygamma psi^{(m)}(x) for real x > 0 at working precision.
Real polygamma(int m, const Real& x);

// Coefficients g_0..g_{trunc-1} of Gamma(1 + x + a P) = sum g_i P^i mod P^trunc.
std::vector<Real> gamma_nilpotent(const Real& x, const Real& a, int trunc);

// Lower incomplete gamma(s, x) for real s > 0, x >= 0, stable at large x.
Real lower_incomplete_gamma(const Real& s, const Real& x);

// Upper incomplete Gamma(s, x), computed directly for large x.
Real upper_incomplete_gamma(const Real& s, const Real& x);

} // namespace lgcorr

#endif
