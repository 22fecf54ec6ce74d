#ifndef LGCORR_RATIONAL_HPP
#define LGCORR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcorr {

// Exact arithmetic backbone. mpq_rational is always stored reduced with a
// positive denominator, which is exactly the BigRational contract.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

// floor(x) as an integer
inline Int rat_floor(const Rat& x)
{
    Int q = rat_num(x) / rat_den(x);
    if (rat_num(x) < 0 && q * rat_den(x) != rat_num(x)) --q;
    return q;
}

// fractional part <x> = x - floor(x), in [0,1)
inline Rat frac(const Rat& x) { return x - Rat(rat_floor(x)); }

inline long to_long(const Int& n)
{
    return static_cast<long>(n);
}

inline Rat rat_pow(Rat base, long e)
{
    if (e < 0) { base = Rat(1) / base; e = -e; }
    Rat r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int int_pow(Int base, long e)
{
    Int r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int factorial(long n)
{
    Int r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Parse "a/b" or "a" (whitespace-trimmed).  Throws on malformed input.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& x);

} // namespace lgcorr

#endif
