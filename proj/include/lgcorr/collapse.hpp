#ifndef LGCORR_COLLAPSE_HPP
#define LGCORR_COLLAPSE_HPP

#include "lgcorr/laplace.hpp"
#include "lgcorr/mp_linalg.hpp"

#include <optional>

namespace lgcorr {

// Component labels of the ambient Chen-Ruan basis: (sector phase, P-power),
// ordered by sector then power.  This is the coordinate frame of every
// Gromov-Witten fundamental-system sample.
std::vector<std::pair<Rat, int>> ambient_component_labels(const WeightSystem& ws);

// I_GW^small(q, 1) summed componentwise at a real positive q.  log_branch
// shifts the branch of log q in the q^P prefactor by 2 pi i * branch,
// selecting the sector of u = q^{1/r} the expansion lives in.
std::vector<Complex> sample_gw_small(const WeightSystem& ws, const Real& q,
                                     long log_branch = 0);
std::vector<std::vector<Complex>> sample_gw_many(const WeightSystem& ws,
                                                 const std::vector<Real>& qs,
                                                 long log_branch = 0,
                                                 ExecMode mode = ExecMode::Serial);

// I_FJRW^small(t, -1) per narrow branch at a real positive t (entire series).
std::vector<Complex> sample_fjrw_small(const WeightSystem& ws, const Real& t);
std::vector<std::vector<Complex>> sample_fjrw_many(const WeightSystem& ws,
                                                   const std::vector<Real>& ts,
                                                   ExecMode mode = ExecMode::Serial);

struct CollapseMap {
    CMatrix L;                          // target-dim x source-dim
    std::vector<Real> singular_values;  // of L
    long numerical_rank = 0;
    std::vector<Real> stacked_singulars; // of the stacked sample matrix
    Real sv_gap;                         // sigma_rank / sigma_{rank+1} of the stack
    Real residual_rel;                   // worst held-out relative residual
    Real laplace_error_max;              // largest reported quadrature error estimate
};

struct CollapseOptions {
    long series_order = 0;   // 0: derived from the working precision
    long gw_max_terms = 200000;
    std::optional<Rat> ray_turns; // override the default integration ray
    ExecMode mode = ExecMode::Serial;
};

// L_GW: ambient GW fundamental system -> Laplace-transformed FJRW side,
// least-squares fitted at the sample points q (Fano case).
CollapseMap collapse_map_fano(const WeightSystem& ws, const std::vector<Real>& fit_q,
                              const std::vector<Real>& holdout_q,
                              const CollapseOptions& opt = {});

// Roles swapped (general type): FJRW fundamental system vs Laplace of the
// regularized GW series, samples parametrized by t with u = t^{d/kappa}.
CollapseMap collapse_map_gt(const WeightSystem& ws, const std::vector<Real>& fit_t,
                            const std::vector<Real>& holdout_t,
                            const CollapseOptions& opt = {});

struct SteepestReport {
    std::vector<Real> qs;
    std::vector<Complex> p0;             // I_GW * q^{(N-2)/(2r)} e^{-alpha q^{1/r}}, P^0 part
    Real band;                           // (max-min)/mean of |p0|
    Real max_adjacent_change;            // max |p0_{i+1}/p0_i - 1|
    Real direction_residual;             // direction vs Gamma(1+P)^N/Gamma(1+dP) at the last q
    std::vector<Complex> direction;      // normalized components at the last q
    std::vector<Complex> gamma_direction;
};

// Leading exponential behavior for unit weights (Theorem-level check).
SteepestReport steepest_leading(const WeightSystem& ws, const std::vector<Real>& qs,
                                ExecMode mode = ExecMode::Serial);

// Recompute a few Laplace values under a refined profile and check the
// reported error estimates dominate the observed change.
struct EstimateCheck {
    Real max_delta;
    Real min_estimate;
    bool honored;
};
EstimateCheck verify_laplace_estimates(const RegularizedSeries& reg, const WeightSystem& ws,
                                       const LaplaceProfile& profile,
                                       const std::vector<Real>& us,
                                       ExecMode mode = ExecMode::Serial);

} // namespace lgcorr

#endif
