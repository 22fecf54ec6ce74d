#ifndef LGCORR_REGULARIZED_HPP
#define LGCORR_REGULARIZED_HPP

#include "lgcorr/exponent_sum.hpp"
#include "lgcorr/mp_complex.hpp"

namespace lgcorr {

// One scalar component of a regularized I-function: a power series
//   g(tau) = sum_n sum_j coeff[n][j] tau^{expo0 + n*step} log(tau)^j
// convergent for |tau| < radius.  `formal[n][j]` stores the matching
// pre-Borel coefficients of the asymptotic series in u^{-(expo0+n*step)}.
struct RegBranch {
    long label = 0;   // narrow index k (Fano) or ambient-sector index (GT)
    Rat sector;       // lambda-phase f of the sector (GT side)
    int p_index = 0;  // P-power component (GT side)
    Rat expo0;
    long step = 1;
    std::vector<std::vector<Real>> coeff;
    std::vector<std::vector<Real>> formal;
};

struct RegularizedSeries {
    bool fano = true;
    long var_power = 1;    // r or kappa
    Rat radius_pow;        // |tau|^{var_power} < radius_pow
    Real radius;           // radius_pow^{1/var_power}
    std::vector<RegBranch> branches;
};

// Borel-regularized FJRW I-function (kappa < 0): coefficient of
// tau^{r(l+(k+1)/d)} is the LG-point coefficient divided by Gamma(1+r(dl+k+1)/d).
RegularizedSeries regularize_fano(const WeightSystem& ws, long order);

// Borel-regularized GW I-function (kappa > 0), P handled componentwise with
// the tau^{kappa P} dressing expanded into log-powers.
RegularizedSeries regularize_gt(const WeightSystem& ws, long order);

// Per-branch ratio-test estimate of 1/radius from the stored coefficients.
Real ratio_test(const RegBranch& b, long window = 20);

} // namespace lgcorr

#endif
