#ifndef LGCORR_MILNOR_HPP
#define LGCORR_MILNOR_HPP

#include "lgcorr/weight_system.hpp"

#include <map>

namespace lgcorr {

// Charge-graded dimensions of a Milnor ring (possibly of a restriction W_gamma).
// The charge of a monomial prod x_j^{m_j} is sum (m_j+1) w_j / d, the grading
// of the residue pairing; a class is <J>-invariant iff its charge is integral.
struct MilnorData {
    std::map<Rat, long> dims;           // all classes by charge
    std::map<Rat, long> invariant_dims; // classes invariant under the given group
    Int total = 0;

    long invariant_total() const
    {
        long s = 0;
        for (const auto& [c, n] : invariant_dims) s += n;
        return s;
    }
};

// Product-formula Poincare series prod_j (t^{d-w_j}-1)/(t^{w_j}-1) for the
// weights of ws; invariants taken under <J> (integral charge).  Throws if the
// quotient is not a polynomial.  `weights` may be a restriction, so no gcd
// condition is imposed here.
MilnorData milnor_poincare(const std::vector<long>& weights, long degree);
MilnorData milnor_poincare(const WeightSystem& ws);

// Invariant dimensions of the gamma-sector for a Fermat polynomial
// W = sum x_j^{d/w_j}: monomials prod x_j^{m_j} over the coordinates fixed by
// gamma, 0 <= m_j <= d/w_j - 2, kept when every generator h of G satisfies
// sum (m_j+1) Theta_j^h in Z.
MilnorData fermat_invariant_dims(const WeightSystem& ws, const SymmetryGroup& G,
                                 const GroupElement& gamma);

// <J>-invariant dims of the restricted Milnor ring of W_gamma via the product
// formula (valid for G = <J_W> without the Fermat hypothesis).
MilnorData restricted_invariant_dims(const WeightSystem& ws, const GroupElement& gamma);

} // namespace lgcorr

#endif
