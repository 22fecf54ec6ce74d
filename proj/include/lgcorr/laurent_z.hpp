#ifndef LGCORR_LAURENT_Z_HPP
#define LGCORR_LAURENT_Z_HPP

#include "lgcorr/nilpotent_poly.hpp"

#include <map>

namespace lgcorr {

// Laurent polynomial in z with NilpotentPoly coefficients.  Finite support,
// no zero entries, all coefficients share one P-truncation order.
class LaurentZ {
public:
    LaurentZ() : trunc_(1) {}
    explicit LaurentZ(int trunc) : trunc_(trunc) {}
    LaurentZ(long zpow, NilpotentPoly c) : trunc_(c.trunc())
    {
        if (!c.is_zero()) coeff_.emplace(zpow, std::move(c));
    }

    int trunc() const { return trunc_; }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<long, NilpotentPoly>& terms() const { return coeff_; }

    NilpotentPoly coeff(long zpow) const
    {
        auto it = coeff_.find(zpow);
        return it == coeff_.end() ? NilpotentPoly(trunc_) : it->second;
    }

    void add_term(long zpow, const NilpotentPoly& c)
    {
        if (c.is_zero()) return;
        if (coeff_.empty()) trunc_ = c.trunc();
        auto [it, fresh] = coeff_.try_emplace(zpow, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }

    LaurentZ operator-() const
    {
        LaurentZ r(trunc_);
        for (const auto& [p, c] : coeff_) r.coeff_.emplace(p, -c);
        return r;
    }
    LaurentZ& operator+=(const LaurentZ& o)
    {
        for (const auto& [p, c] : o.coeff_) add_term(p, c);
        return *this;
    }
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
    friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a += -b; }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b)
    {
        LaurentZ r(a.trunc_);
        for (const auto& [p, c] : a.coeff_)
            for (const auto& [q, e] : b.coeff_) r.add_term(p + q, c * e);
        return r;
    }
    LaurentZ& operator*=(const Rat& c)
    {
        if (c == 0) { coeff_.clear(); return *this; }
        for (auto& [p, x] : coeff_) x *= c;
        return *this;
    }
    friend LaurentZ operator*(LaurentZ a, const Rat& c) { return a *= c; }

    bool operator==(const LaurentZ& o) const { return coeff_ == o.coeff_; }

    // Substitute a rational value for z (used with z = 1 and z = -1).
    NilpotentPoly eval_z(const Rat& z) const
    {
        NilpotentPoly r(trunc_);
        for (const auto& [p, c] : coeff_) r += c * rat_pow(z, p);
        return r;
    }

    LaurentZ shift_z(long k) const // multiply by z^k
    {
        LaurentZ r(trunc_);
        for (const auto& [p, c] : coeff_) r.coeff_.emplace(p + k, c);
        return r;
    }

    std::string str() const;

private:
    std::map<long, NilpotentPoly> coeff_;
    int trunc_;
};

} // namespace lgcorr

#endif
