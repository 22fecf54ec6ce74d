#ifndef LGCORR_LAPLACE_HPP
#define LGCORR_LAPLACE_HPP

#include "lgcorr/diff_operator.hpp"
#include "lgcorr/parallel.hpp"
#include "lgcorr/regularized.hpp"

namespace lgcorr {

// Integration setup for u L(I^reg)(u) along the ray tau = x e^{2 pi i theta}.
struct LaplaceProfile {
    Rat theta_turns;        // ray angle in turns
    Real tau0;              // series-patch endpoint, inside the disk
    Real T;                 // far endpoint reached by the ODE (grown on demand)
    int gl_nodes = 32;      // Gauss-Legendre nodes per panel
    Real step_fraction;     // ODE step as a fraction of the local radius
    Real rel_budget;        // relative accuracy target

    LaplaceProfile() : tau0(0), T(0), step_fraction(Real(1) / 3), rel_budget(0) {}
};

// Ray maximizing the distance to the finite singularities of the regularized
// operator, restricted to |theta| < 1/4 turn so e^{-u tau} still decays for
// the positive-real u samples.
LaplaceProfile default_profile(const RegularizedSeries& reg);

// Singularities of the regularized Picard-Fuchs operator (finite, nonzero).
std::vector<Complex> regularized_singularities(const RegularizedSeries& reg);

// Holonomic Taylor continuation of one branch along the profile ray, with
// local polynomial data kept per step for later quadrature.
struct OdeStep {
    Real center;                       // arc-length position on the ray
    Real h;                            // step length
    std::vector<Complex> taylor;       // local solution coefficients
};

struct BranchContinuation {
    const RegBranch* branch = nullptr;
    std::vector<OdeStep> steps;        // covering [tau0, T]
    Real ode_error;                    // accumulated local truncation estimate
};

// Build the order-n companion recursion from the regularized PF operator and
// continue every branch of `reg` from tau0 to T.  Deterministic.
std::vector<BranchContinuation> continue_ode(const RegularizedSeries& reg,
                                             const WeightSystem& ws,
                                             const LaplaceProfile& profile,
                                             ExecMode mode = ExecMode::Serial);

// Evaluate a branch series (with logs) and its first n-1 derivatives at
// arc-length x on the ray.
std::vector<Complex> branch_series_jet(const RegBranch& b, const Rat& theta_turns,
                                       const Real& x, int nder);

// Evaluate the continued solution at arc position x (must lie in a step).
Complex ode_eval(const BranchContinuation& bc, const Real& x);

// Wronskian-style monitor: determinant of the local fundamental jets stays
// away from zero along the ray (checked on the companion system).
Real wronskian_min(const RegularizedSeries& reg, const WeightSystem& ws,
                   const LaplaceProfile& profile);

struct LaplaceValue {
    Complex value;
    Real error; // series tail + quadrature delta + ODE budget + tail bound
};

// u L(branch)(u) with the series patch on [0,tau0], panel quadrature on
// [tau0,T] against the continuation, and a controlled exponential tail.
LaplaceValue laplace_value(const RegBranch& b, const BranchContinuation& bc,
                           const LaplaceProfile& profile, const Real& u);

// All branches at many sample points; data-parallel over samples.
std::vector<std::vector<LaplaceValue>> laplace_samples(
    const RegularizedSeries& reg, const std::vector<BranchContinuation>& cont,
    const LaplaceProfile& profile, const std::vector<Real>& us,
    ExecMode mode = ExecMode::Serial);

// Partial sums of the formal asymptotic series of a branch at u.
Complex formal_partial_sum(const RegBranch& b, const Real& u, long mterms);
Complex formal_term(const RegBranch& b, const Real& u, long n);

struct WatsonRow {
    long branch_index;
    Real u;
    long m;
    Real error;      // |I(u) - S_m(u)|
    Real next_term;  // |a_{m+1} psi_{m+1}(u)|
    Real ratio;      // error / next_term
};

// Watson-decay table for m = 0..mmax at the given samples.
std::vector<WatsonRow> watson_check(const RegularizedSeries& reg,
                                    const std::vector<BranchContinuation>& cont,
                                    const LaplaceProfile& profile,
                                    const std::vector<Real>& us, long mmax,
                                    ExecMode mode = ExecMode::Serial);

} // namespace lgcorr

#endif
