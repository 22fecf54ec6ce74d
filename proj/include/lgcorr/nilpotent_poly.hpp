#ifndef LGCORR_NILPOTENT_POLY_HPP
#define LGCORR_NILPOTENT_POLY_HPP

#include "lgcorr/rational.hpp"

#include <map>
#include <ostream>

namespace lgcorr {

// Truncated polynomial in the hyperplane class P, with P^m = 0.  Coefficients
// are exact rationals; the truncation order is part of the value, and mixing
// orders is an error rather than a silent re-truncation.
class NilpotentPoly {
public:
    NilpotentPoly() : trunc_(1) {}
    explicit NilpotentPoly(int trunc) : trunc_(trunc) { check_trunc(); }
    NilpotentPoly(const Rat& c, int trunc) : trunc_(trunc)
    {
        check_trunc();
        if (c != 0) coeff_.push_back(c);
    }
    static NilpotentPoly variable(int trunc) // the class P itself
    {
        NilpotentPoly p(trunc);
        if (trunc >= 2) p.coeff_ = {Rat(0), Rat(1)};
        return p;
    }

    int trunc() const { return trunc_; }
    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    Rat coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeff_.size())) return Rat(0);
        return coeff_[i];
    }
    void set_coeff(int i, const Rat& c);

    NilpotentPoly operator-() const;
    NilpotentPoly& operator+=(const NilpotentPoly& o);
    NilpotentPoly& operator-=(const NilpotentPoly& o);
    friend NilpotentPoly operator+(NilpotentPoly a, const NilpotentPoly& b) { return a += b; }
    friend NilpotentPoly operator-(NilpotentPoly a, const NilpotentPoly& b) { return a -= b; }
    friend NilpotentPoly operator*(const NilpotentPoly& a, const NilpotentPoly& b);
    NilpotentPoly& operator*=(const NilpotentPoly& o) { return *this = *this * o; }
    NilpotentPoly& operator*=(const Rat& c);
    friend NilpotentPoly operator*(NilpotentPoly a, const Rat& c) { return a *= c; }
    friend NilpotentPoly operator*(const Rat& c, NilpotentPoly a) { return a *= c; }

    bool operator==(const NilpotentPoly& o) const
    {
        return trunc_ == o.trunc_ && coeff_ == o.coeff_;
    }

    // Multiplicative inverse mod P^trunc; requires a unit constant term.
    NilpotentPoly inverse() const;

    // Re-truncate to a (possibly smaller) order.
    NilpotentPoly retrunc(int trunc) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const NilpotentPoly& p)
    {
        return os << p.str();
    }

private:
    void check_trunc() const
    {
        if (trunc_ < 1) throw std::invalid_argument("NilpotentPoly: truncation order must be >= 1");
    }
    void trim();
    static void require_same_trunc(const NilpotentPoly& a, const NilpotentPoly& b);

    std::vector<Rat> coeff_; // coeff_[i] multiplies P^i, size <= trunc_
    int trunc_;
};

} // namespace lgcorr

#endif
