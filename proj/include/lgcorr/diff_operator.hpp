#ifndef LGCORR_DIFF_OPERATOR_HPP
#define LGCORR_DIFF_OPERATOR_HPP

#include "lgcorr/exponent_sum.hpp"

#include <map>

namespace lgcorr {

// Dense polynomial in the Euler operator D = x d/dx with rational coefficients.
using DPoly = std::vector<Rat>;

DPoly dpoly_mul(const DPoly& a, const DPoly& b);
DPoly dpoly_add(const DPoly& a, const DPoly& b);
DPoly dpoly_shift(const DPoly& p, const Rat& s); // p(D + s)
// Evaluate p at a NilpotentPoly argument (e.g. e + P).
NilpotentPoly dpoly_eval(const DPoly& p, const NilpotentPoly& arg);
Rat dpoly_eval(const DPoly& p, const Rat& arg);

// Sum of monomials x^a * p_a(D), exact rational coefficients.
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::string var) : var_(std::move(var)) {}

    const std::string& var() const { return var_; }
    const std::map<long, DPoly>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }
    int order() const; // highest D-degree

    void add_monomial(long xpow, const DPoly& p);

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    // Operator composition: x^a p(D) . x^b r(D) = x^{a+b} p(D+b) r(D).
    DiffOperator operator*(const DiffOperator& o) const;
    DiffOperator scaled(const Rat& c) const;

    // Canonical ASCII form "x^a * (c_k D^k + ...) + ...".
    std::string str() const;

private:
    std::map<long, DPoly> monomials_;
    std::string var_ = "q";
};

enum class PfForm {
    Q,                 // the Picard-Fuchs operator in q, z = 1
    TGeneralType,      // after q = t^{-d}
    UMassive,          // after q = u^r (Fano)
    TauRegularizedFano,
    TauRegularizedGt,
};

// The operator as displayed, including the Euler factors.
DiffOperator build_pf(const WeightSystem& ws, PfForm form);

// The q-form with the left factors common to both product sides removed;
// one concrete choice of the "irreducible component".
DiffOperator build_pf_reduced(const WeightSystem& ws);

// Exact application using D x^{e+P} = (e+P) x^{e+P} (P present only when the
// series carries the P-shift).  Coefficients stay Laurent in z.
ExponentSum apply(const DiffOperator& op, const ExponentSum& f);

// True when every term with exponent <= frontier vanishes.
bool annihilates_below(const ExponentSum& residual, const Rat& frontier);

} // namespace lgcorr

#endif
