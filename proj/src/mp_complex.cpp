#include "lgcorr/mp_complex.hpp"

#include <boost/math/constants/constants.hpp>

#include <atomic>
#include <mutex>

namespace lgcorr {

namespace {
std::atomic<unsigned> g_bits{200};

unsigned digits10_for_bits(unsigned bits)
{
    return static_cast<unsigned>(bits * 0.30103) + 4;
}
} // namespace

void set_precision_bits(unsigned bits)
{
    g_bits.store(bits);
    Real::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() { return g_bits.load(); }

void apply_thread_precision()
{
    Real::default_precision(digits10_for_bits(g_bits.load()));
}

Real real_from_rat(const Rat& x)
{
    return Real(rat_num(x).str()) / Real(rat_den(x).str());
}

Real pi_value() { return boost::math::constants::pi<Real>(); }

Real euler_gamma_value() { return boost::math::constants::euler<Real>(); }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z)
{
    Real m = boost::multiprecision::exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z)
{
    return {boost::multiprecision::log(abs(z)), atan2(z.im, z.re)};
}

Complex sqrt(const Complex& z)
{
    if (z.is_zero()) return z;
    Real m = boost::multiprecision::sqrt(abs(z));
    Real a = atan2(z.im, z.re) / 2;
    return polar(m, a);
}

Complex pow(const Complex& z, const Real& p)
{
    if (z.is_zero()) return z;
    Real m = boost::multiprecision::pow(abs(z), p);
    Real a = atan2(z.im, z.re) * p;
    return polar(m, a);
}

Complex polar(const Real& modulus, const Real& angle)
{
    return {modulus * cos(angle), modulus * sin(angle)};
}

Complex unit_phase(const Rat& turns)
{
    Real a = 2 * pi_value() * real_from_rat(turns);
    return polar(Real(1), a);
}

const std::vector<Rat>& bernoulli_numbers(int n)
{
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        long m = static_cast<long>(cache.size());
        Rat s(0);
        Int binom(1); // C(m+1, 0)
        for (long j = 0; j < m; ++j) {
            s += Rat(binom) * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-s / Rat(binom)); // binom = C(m+1, m)
    }
    return cache;
}

Real polygamma(int m, const Real& x)
{
    if (m < 0) throw std::invalid_argument("polygamma: m >= 0 required");
    if (x <= 0) throw std::invalid_argument("polygamma: x > 0 required");
    // recurrence psi^{(m)}(x) = psi^{(m)}(y) + (-1)^{m+1} m! sum 1/(x+i)^{m+1}
    // pushes the argument up to where the Bernoulli expansion converges fast
    Real big = Real(precision_bits()) * Real(0.35) + 20;
    Real y = x;
    Real tail(0);
    while (y < big) {
        tail += boost::multiprecision::pow(y, -(m + 1));
        y += 1;
    }
    Real mfact(1);
    for (int i = 2; i <= m; ++i) mfact *= i;
    const int kmax = 120;
    const auto& B = bernoulli_numbers(2 * kmax);
    const Real eps = ldexp(Real(1), -static_cast<long>(precision_bits()) - 8);

    if (m == 0) {
        Real r = boost::multiprecision::log(y) - 1 / (2 * y);
        Real y2 = y * y, ypow = y2;
        for (int k = 1; k <= kmax; ++k) {
            Real term = real_from_rat(B[2 * k]) / (2 * k * ypow);
            r -= term;
            ypow *= y2;
            if (boost::multiprecision::abs(term) < eps) break;
        }
        return r - tail;
    }

    // psi^{(m)}(y) = (-1)^{m-1} [ (m-1)!/y^m + m!/(2 y^{m+1})
    //                + sum_k B_{2k} (2k+m-1)!/(2k)! y^{-(2k+m)} ]
    Real s = mfact / Real(m) / boost::multiprecision::pow(y, m) +
             mfact / (2 * boost::multiprecision::pow(y, m + 1));
    Real y2 = y * y;
    Real ypow = boost::multiprecision::pow(y, m + 2);
    for (int k = 1; k <= kmax; ++k) {
        Real ratio(1);
        for (long i = 2 * k + 1; i <= 2 * k + m - 1; ++i) ratio *= i;
        Real term = real_from_rat(B[2 * k]) * ratio / ypow;
        s += term;
        ypow *= y2;
        if (boost::multiprecision::abs(term) < boost::multiprecision::abs(s) * eps) break;
    }
    Real sign = (m % 2 == 1) ? Real(1) : Real(-1); // (-1)^{m-1} = (-1)^{m+1}
    return sign * (s + mfact * tail);
}

std::vector<Real> gamma_nilpotent(const Real& x, const Real& a, int trunc)
{
    // Gamma(1+x+aP) = Gamma(1+x) exp(sum_{i>=1} psi^{(i-1)}(1+x) (aP)^i / i!)
    std::vector<Real> lg(trunc, Real(0));
    Real apow(1);
    Real fact(1);
    for (int i = 1; i < trunc; ++i) {
        apow *= a;
        fact *= i;
        lg[i] = polygamma(i - 1, x + 1) * apow / fact;
    }
    // exponentiate the truncated series
    std::vector<Real> out(trunc, Real(0));
    out[0] = 1;
    std::vector<Real> term(trunc, Real(0));
    term[0] = 1;
    for (int n = 1; n < trunc; ++n) {
        // term <- term * lg / n
        std::vector<Real> nt(trunc, Real(0));
        for (int i = 0; i < trunc; ++i) {
            if (term[i] == 0) continue;
            for (int j = 1; i + j < trunc; ++j) nt[i + j] += term[i] * lg[j];
        }
        for (int i = 0; i < trunc; ++i) term[i] = nt[i] / n;
        for (int i = 0; i < trunc; ++i) out[i] += term[i];
    }
    Real g = tgamma(x + 1);
    for (auto& c : out) c *= g;
    return out;
}

namespace {

Real upper_gamma_cf(const Real& s, const Real& x)
{
    Real tiny = ldexp(Real(1), -static_cast<long>(precision_bits()) * 4);
    Real b = x + 1 - s, c = 1 / tiny, d = 1 / b, h = d;
    for (long i = 1; i < 100000; ++i) {
        Real an = -Real(i) * (Real(i) - s);
        b += 2;
        d = an * d + b;
        if (boost::multiprecision::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (boost::multiprecision::abs(c) < tiny) c = tiny;
        d = 1 / d;
        Real delta = d * c;
        h *= delta;
        if (boost::multiprecision::abs(delta - 1) <
            ldexp(Real(1), -static_cast<long>(precision_bits()) - 8))
            break;
    }
    return boost::multiprecision::pow(x, s) * boost::multiprecision::exp(-x) * h;
}

} // namespace

Real upper_incomplete_gamma(const Real& s, const Real& x)
{
    if (x <= 0) return tgamma(s);
    if (x >= s + 4) return upper_gamma_cf(s, x);
    return tgamma(s) - lower_incomplete_gamma(s, x);
}

Real lower_incomplete_gamma(const Real& s, const Real& x)
{
    if (x < 0) throw std::invalid_argument("lower_incomplete_gamma: x >= 0 required");
    if (x == 0) return Real(0);
    if (x < s + 4) {
        // gamma(s,x) = x^s e^{-x} sum_{n>=0} x^n / (s (s+1) ... (s+n))
        Real term = 1 / s;
        Real sum = term;
        Real denom = s;
        for (long n = 1; n < 100000; ++n) {
            denom += 1;
            term *= x / denom;
            sum += term;
            if (term < sum * ldexp(Real(1), -static_cast<long>(precision_bits()) - 8)) break;
        }
        return boost::multiprecision::pow(x, s) * boost::multiprecision::exp(-x) * sum;
    }
    // via the directly-computed upper gamma
    return tgamma(s) - upper_gamma_cf(s, x);
}

} // namespace lgcorr
