#ifndef LGCORR_EXPONENT_SUM_HPP
#define LGCORR_EXPONENT_SUM_HPP

#include "lgcorr/laurent_z.hpp"
#include "lgcorr/weight_system.hpp"

#include <map>

namespace lgcorr {

// Generalized series sum c_{s,e}(P,z) x^{e}, with terms keyed by
// (sector, rational exponent).  On the Gromov-Witten side the sector key is
// the lambda-phase f of 1_f and exponents carry the implicit P-shift
// x^{e+P}; on the FJRW side the key is the narrow index k of phi_k.
class ExponentSum {
public:
    enum class SectorKind { LambdaPhase, NarrowIndex };
    using TermKey = std::pair<Rat, Rat>; // (sector, exponent)

    ExponentSum() = default;
    ExponentSum(SectorKind kind, std::string var, bool p_shift)
        : kind_(kind), var_(std::move(var)), p_shift_(p_shift)
    {
    }

    SectorKind sector_kind() const { return kind_; }
    const std::string& var() const { return var_; }
    bool p_shift() const { return p_shift_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, LaurentZ>& terms() const { return terms_; }

    void add_term(const Rat& sector, const Rat& exponent, const LaurentZ& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace({sector, exponent}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentZ coeff(const Rat& sector, const Rat& exponent) const
    {
        auto it = terms_.find({sector, exponent});
        return it == terms_.end() ? LaurentZ() : it->second;
    }

    // Substitute a rational value for z in every coefficient.
    ExponentSum eval_z(const Rat& z) const;

    // Largest exponent present (0 if empty).
    Rat max_exponent() const;
    Rat min_exponent() const;

    std::string str() const;

private:
    std::map<TermKey, LaurentZ> terms_;
    SectorKind kind_ = SectorKind::LambdaPhase;
    std::string var_ = "q";
    bool p_shift_ = false;
};

// P-truncation order of the f-sector: dimension of the sector's fixed locus
// inside the hypersurface plus one (N_f - 1 for sectors in G, N_f for the
// non-Gorenstein rays).
int sector_p_trunc(const WeightSystem& ws, const Rat& f);

// All lambda-phases of the <J>-coset of the identity, i.e. the sectors of
// the ambient I-function.
std::vector<Rat> ambient_sectors(const WeightSystem& ws);

// Total ambient rank: sum of the sector truncation orders.
int ambient_rank(const WeightSystem& ws);

// Small Gromov-Witten I-function up to q-exponent `order` (inclusive),
// exact in P and z.  Per-sector P-truncations may be overridden.
ExponentSum gw_small_i(const WeightSystem& ws, long order,
                       const std::map<Rat, int>* p_trunc = nullptr);

// Which t-exponent lattice the small FJRW I-function uses.
enum class SmallConvention {
    TPower,     // t^{dl+k+1} as in the standalone display
    BigSlice,   // t^{dl+k} as the t_0^1-slice of the big I-function
};

// Small FJRW I-function with exact Gamma-ratio coefficients, l <= order.
ExponentSum fjrw_small_i(const WeightSystem& ws, long order,
                         SmallConvention conv = SmallConvention::TPower);

// The formal solutions at the Landau-Ginzburg point: the small I-function at
// t = q^{-1/d}, z = -1, with exponents on the lattice -(l + (k+1)/d).
ExponentSum fjrw_small_at_lg(const WeightSystem& ws, long order);

// Recover the two-variable small I-function from its z = 1 specialization
// via the grading operator.
ExponentSum restore_z(const WeightSystem& ws, const ExponentSum& small_at_z1);

} // namespace lgcorr

#endif
