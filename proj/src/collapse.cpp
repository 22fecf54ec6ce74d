#include "lgcorr/collapse.hpp"

#include <algorithm>
#include <mutex>

namespace lgcorr {

namespace {

using PVec = std::vector<Real>;

PVec pvec_mul(const PVec& a, const PVec& b, int m)
{
    PVec r(m, Real(0));
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < m; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

PVec pvec_inv(const PVec& a, int m)
{
    PVec r(m, Real(0));
    r[0] = 1 / a[0];
    for (int k = 1; k < m; ++k) {
        Real s(0);
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

std::vector<Complex> cpvec_mul(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               int m)
{
    std::vector<Complex> r(m, Complex(Rat(0)));
    for (int i = 0; i < m; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < m; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Real pvec_norm(const PVec& a)
{
    Real r(0);
    for (const Real& x : a) r += boost::multiprecision::abs(x);
    return r;
}

} // namespace

std::vector<std::pair<Rat, int>> ambient_component_labels(const WeightSystem& ws)
{
    std::vector<std::pair<Rat, int>> out;
    for (const Rat& f : ambient_sectors(ws)) {
        int m = sector_p_trunc(ws, f);
        for (int i = 0; i < m; ++i) out.emplace_back(f, i);
    }
    return out;
}

std::vector<Complex> sample_gw_small(const WeightSystem& ws, const Real& q, long log_branch)
{
    const long d = ws.degree;
    const Real eps = ldexp(Real(1), -static_cast<long>(precision_bits()) - 16);

    std::vector<Complex> out;
    for (const Rat& f : ambient_sectors(ws)) {
        const int m = sector_p_trunc(ws, f);
        if (m <= 0) continue;
        // exponent class n = s0, s0+1, ...; the sector of 1_{<-n>} is f
        Rat s0 = frac(-f);
        // leading coefficient A_{s0}(P), computed exactly then embedded
        ExponentSum head = gw_small_i(ws, 1); // enough to pick up n = s0 <= 1
        NilpotentPoly a0 = head.coeff(f, s0).eval_z(Rat(1));
        PVec acc(m, Real(0)), cur(m, Real(0));
        for (int i = 0; i < m; ++i) cur[i] = real_from_rat(a0.coeff(i));

        Real qn = boost::multiprecision::pow(q, real_from_rat(s0));
        Real maxterm(0);
        Rat n = s0;
        for (long it = 0; it < 200000; ++it) {
            Real scale = pvec_norm(cur) * qn;
            for (int i = 0; i < m; ++i) acc[i] += cur[i] * qn;
            maxterm = std::max(maxterm, scale);
            if (it > 8 && scale < maxterm * eps) break;
            // advance the coefficient by the exact one-step ratio
            PVec num(m, Real(0));
            num[0] = 1;
            for (long i = 1; i <= d; ++i) {
                PVec factor(m, Real(0));
                factor[0] = real_from_rat(Rat(d) * n) + i;
                if (m > 1) factor[1] = d;
                num = pvec_mul(num, factor, m);
            }
            for (long w : ws.weights) {
                for (long i = 1; i <= w; ++i) {
                    PVec factor(m, Real(0));
                    factor[0] = real_from_rat(Rat(w) * n) + i;
                    if (m > 1) factor[1] = w;
                    num = pvec_mul(num, pvec_inv(factor, m), m);
                }
            }
            cur = pvec_mul(cur, num, m);
            n += 1;
            qn *= q;
        }

        // q^P prefactor with the selected log branch
        Complex lq(boost::multiprecision::log(q), 2 * pi_value() * log_branch);
        std::vector<Complex> pref(m, Complex(Rat(0)));
        Complex lp{Rat(1)};
        Real fact(1);
        for (int i = 0; i < m; ++i) {
            if (i > 0) {
                lp *= lq;
                fact *= i;
            }
            pref[i] = lp / Complex(fact);
        }
        std::vector<Complex> sector(m);
        for (int i = 0; i < m; ++i) sector[i] = Complex(acc[i]);
        sector = cpvec_mul(sector, pref, m);
        for (int i = 0; i < m; ++i) out.push_back(sector[i]);
    }
    return out;
}

std::vector<std::vector<Complex>> sample_gw_many(const WeightSystem& ws,
                                                 const std::vector<Real>& qs,
                                                 long log_branch, ExecMode mode)
{
    std::vector<std::vector<Complex>> out(qs.size());
    parallel_for(static_cast<long>(qs.size()), mode, [&](long i) {
        out[static_cast<size_t>(i)] = sample_gw_small(ws, qs[static_cast<size_t>(i)], log_branch);
    });
    return out;
}

std::vector<Complex> sample_fjrw_small(const WeightSystem& ws, const Real& t)
{
    static std::map<std::pair<std::vector<long>, long>, ExponentSum> cache;
    static std::mutex mu;
    const Real eps = ldexp(Real(1), -static_cast<long>(precision_bits()) - 16);
    const long d = ws.degree;

    // series order adequate for the entire series at moderate t
    long order = 40 + static_cast<long>(precision_bits() / 8);
    ExponentSum series;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(ws.weights, ws.degree * 1000000 + order);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, fjrw_small_i(ws, order).eval_z(Rat(-1))).first;
        series = it->second;
    }

    std::vector<Complex> out;
    for (long k : narrow_set(ws)) {
        Real acc(0), maxterm(0);
        for (long l = 0; l <= order; ++l) {
            Rat c = series.coeff(Rat(k), Rat(d * l + k + 1)).coeff(0).coeff(0);
            if (c == 0) continue;
            Real term = real_from_rat(c) * boost::multiprecision::pow(t, Real(d * l + k + 1));
            acc += term;
            Real aterm = boost::multiprecision::abs(term);
            maxterm = std::max(maxterm, aterm);
            if (l > 4 && aterm < maxterm * eps) break;
        }
        out.push_back(Complex(acc));
    }
    return out;
}

std::vector<std::vector<Complex>> sample_fjrw_many(const WeightSystem& ws,
                                                   const std::vector<Real>& ts, ExecMode mode)
{
    std::vector<std::vector<Complex>> out(ts.size());
    parallel_for(static_cast<long>(ts.size()), mode, [&](long i) {
        out[static_cast<size_t>(i)] = sample_fjrw_small(ws, ts[static_cast<size_t>(i)]);
    });
    return out;
}

namespace {

CollapseMap fit_collapse(const std::vector<std::vector<Complex>>& source_fit,
                         const std::vector<std::vector<Complex>>& target_fit,
                         const std::vector<std::vector<Complex>>& source_holdout,
                         const std::vector<std::vector<Complex>>& target_holdout,
                         Real laplace_err)
{
    const long ns = static_cast<long>(source_fit.size());
    const long dim_s = static_cast<long>(source_fit.front().size());
    const long dim_t = static_cast<long>(target_fit.front().size());
    if (ns < dim_s) throw std::invalid_argument("collapse fit: too few samples");

    // row scaling per sample
    std::vector<Real> scale(static_cast<size_t>(ns), Real(0));
    for (long i = 0; i < ns; ++i) {
        for (const Complex& v : source_fit[static_cast<size_t>(i)])
            scale[static_cast<size_t>(i)] = std::max(scale[static_cast<size_t>(i)], abs(v));
    }
    CMatrix A(ns, dim_s), B(ns, dim_t);
    for (long i = 0; i < ns; ++i) {
        for (long c = 0; c < dim_s; ++c)
            A(i, c) = source_fit[static_cast<size_t>(i)][static_cast<size_t>(c)] /
                      scale[static_cast<size_t>(i)];
        for (long k = 0; k < dim_t; ++k)
            B(i, k) = target_fit[static_cast<size_t>(i)][static_cast<size_t>(k)] /
                      scale[static_cast<size_t>(i)];
    }
    CMatrix X = least_squares(A, B); // dim_s x dim_t
    CollapseMap cm;
    cm.L = CMatrix(dim_t, dim_s);
    for (long k = 0; k < dim_t; ++k)
        for (long c = 0; c < dim_s; ++c) cm.L(k, c) = X(c, k);

    cm.singular_values = singular_values(cm.L);
    Real cutoff = cm.singular_values.front() * ldexp(Real(1), -20);
    cm.numerical_rank = static_cast<long>(std::count_if(
        cm.singular_values.begin(), cm.singular_values.end(),
        [&](const Real& s) { return s > cutoff; }));

    // stacked matrix: all source and target components as rows, samples as columns
    CMatrix M(dim_s + dim_t, ns);
    for (long i = 0; i < ns; ++i) {
        for (long c = 0; c < dim_s; ++c)
            M(c, i) = source_fit[static_cast<size_t>(i)][static_cast<size_t>(c)] /
                      scale[static_cast<size_t>(i)];
        for (long k = 0; k < dim_t; ++k)
            M(dim_s + k, i) = target_fit[static_cast<size_t>(i)][static_cast<size_t>(k)] /
                              scale[static_cast<size_t>(i)];
    }
    cm.stacked_singulars = singular_values(M);
    long rank = std::min(dim_s, ns);
    if (rank < static_cast<long>(cm.stacked_singulars.size()))
        cm.sv_gap = cm.stacked_singulars[static_cast<size_t>(rank - 1)] /
                    cm.stacked_singulars[static_cast<size_t>(rank)];
    else
        cm.sv_gap = 0;

    // held-out relative residual
    Real worst(0);
    for (size_t i = 0; i < source_holdout.size(); ++i) {
        for (long k = 0; k < dim_t; ++k) {
            Complex pred{Rat(0)};
            for (long c = 0; c < dim_s; ++c)
                pred += cm.L(k, c) * source_holdout[i][static_cast<size_t>(c)];
            Real denom = abs(target_holdout[i][static_cast<size_t>(k)]);
            if (denom == 0) continue;
            worst = std::max(worst, Real(abs(pred - target_holdout[i][static_cast<size_t>(k)]) / denom));
        }
    }
    cm.residual_rel = worst;
    cm.laplace_error_max = laplace_err;
    return cm;
}

long default_series_order()
{
    return static_cast<long>(precision_bits()) + 40;
}

} // namespace

CollapseMap collapse_map_fano(const WeightSystem& ws, const std::vector<Real>& fit_q,
                              const std::vector<Real>& holdout_q, const CollapseOptions& opt)
{
    if (ws.kappa() >= 0) throw std::invalid_argument("collapse_map_fano: requires kappa < 0");
    const long r = ws.fano_index();
    long order = opt.series_order > 0 ? opt.series_order : default_series_order();

    RegularizedSeries reg = regularize_fano(ws, order);
    LaplaceProfile prof = default_profile(reg);
    if (opt.ray_turns) prof.theta_turns = *opt.ray_turns;
    Real cth = cos(2 * pi_value() * real_from_rat(prof.theta_turns));
    Real umin(1e300);
    auto to_u = [&](const Real& q) {
        return boost::multiprecision::pow(q, Real(1) / Real(r));
    };
    std::vector<Real> us, us_hold;
    for (const Real& q : fit_q) {
        us.push_back(to_u(q));
        umin = std::min(umin, us.back());
    }
    for (const Real& q : holdout_q) {
        us_hold.push_back(to_u(q));
        umin = std::min(umin, us_hold.back());
    }
    Real Tneed = Real(static_cast<long>(precision_bits()) + 60) * Real(0.70) / (umin * cth);
    prof.T = std::max(prof.T, Tneed);

    std::vector<BranchContinuation> cont = continue_ode(reg, ws, prof, opt.mode);

    auto source_fit = sample_gw_many(ws, fit_q, 0, opt.mode);
    auto source_hold = sample_gw_many(ws, holdout_q, 0, opt.mode);
    auto lap_fit = laplace_samples(reg, cont, prof, us, opt.mode);
    auto lap_hold = laplace_samples(reg, cont, prof, us_hold, opt.mode);

    Real lap_err(0);
    auto strip = [&](const std::vector<std::vector<LaplaceValue>>& lv) {
        std::vector<std::vector<Complex>> vals(lv.size());
        for (size_t i = 0; i < lv.size(); ++i) {
            for (const LaplaceValue& v : lv[i]) {
                vals[i].push_back(v.value);
                Real rel = abs(v.value) > 0 ? Real(v.error / abs(v.value)) : v.error;
                lap_err = std::max(lap_err, rel);
            }
        }
        return vals;
    };
    return fit_collapse(source_fit, strip(lap_fit), source_hold, strip(lap_hold), lap_err);
}

CollapseMap collapse_map_gt(const WeightSystem& ws, const std::vector<Real>& fit_t,
                            const std::vector<Real>& holdout_t, const CollapseOptions& opt)
{
    const long kap = ws.kappa();
    if (kap <= 0) throw std::invalid_argument("collapse_map_gt: requires kappa > 0");
    long order = opt.series_order > 0 ? opt.series_order : default_series_order();

    RegularizedSeries reg = regularize_gt(ws, order);
    LaplaceProfile prof = default_profile(reg);
    if (opt.ray_turns) prof.theta_turns = *opt.ray_turns;
    Real cth = cos(2 * pi_value() * real_from_rat(prof.theta_turns));
    auto to_u = [&](const Real& t) {
        return boost::multiprecision::pow(t, Real(ws.degree) / Real(kap));
    };
    Real umin(1e300);
    std::vector<Real> us, us_hold;
    for (const Real& t : fit_t) {
        us.push_back(to_u(t));
        umin = std::min(umin, us.back());
    }
    for (const Real& t : holdout_t) {
        us_hold.push_back(to_u(t));
        umin = std::min(umin, us_hold.back());
    }
    Real Tneed = Real(static_cast<long>(precision_bits()) + 60) * Real(0.70) / (umin * cth);
    prof.T = std::max(prof.T, Tneed);

    std::vector<BranchContinuation> cont = continue_ode(reg, ws, prof, opt.mode);

    auto source_fit = sample_fjrw_many(ws, fit_t, opt.mode);
    auto source_hold = sample_fjrw_many(ws, holdout_t, opt.mode);
    auto lap_fit = laplace_samples(reg, cont, prof, us, opt.mode);
    auto lap_hold = laplace_samples(reg, cont, prof, us_hold, opt.mode);

    Real lap_err(0);
    auto strip = [&](const std::vector<std::vector<LaplaceValue>>& lv) {
        std::vector<std::vector<Complex>> vals(lv.size());
        for (size_t i = 0; i < lv.size(); ++i) {
            for (const LaplaceValue& v : lv[i]) {
                vals[i].push_back(v.value);
                Real rel = abs(v.value) > 0 ? Real(v.error / abs(v.value)) : v.error;
                lap_err = std::max(lap_err, rel);
            }
        }
        return vals;
    };
    return fit_collapse(source_fit, strip(lap_fit), source_hold, strip(lap_hold), lap_err);
}

SteepestReport steepest_leading(const WeightSystem& ws, const std::vector<Real>& qs,
                                ExecMode mode)
{
    for (long w : ws.weights)
        if (w != 1) throw std::invalid_argument("steepest_leading: unit weights required");
    const long N = ws.nvars();
    const long d = ws.degree;
    if (d >= N) throw std::invalid_argument("steepest_leading: requires d < N");
    const long r = N - d;
    // alpha > 0 with (alpha/r)^r = d^d
    Real alpha = Real(r) * boost::multiprecision::pow(Real(d), Real(d) / Real(r));

    auto samples = sample_gw_many(ws, qs, 0, mode);
    const int m = sector_p_trunc(ws, Rat(0));

    SteepestReport rep;
    rep.qs = qs;
    for (size_t i = 0; i < qs.size(); ++i) {
        Real u = boost::multiprecision::pow(qs[i], Real(1) / Real(r));
        Real damp = boost::multiprecision::pow(qs[i], Real(N - 2) / Real(2 * r)) *
                    boost::multiprecision::exp(-alpha * u);
        rep.p0.push_back(samples[i][0] * damp);
    }
    Real lo(1e300), hi(0);
    Real maxstep(0);
    for (size_t i = 0; i < rep.p0.size(); ++i) {
        Real a = abs(rep.p0[i]);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
        if (i > 0) {
            Real rel = abs(rep.p0[i] - rep.p0[i - 1]) / abs(rep.p0[i - 1]);
            maxstep = std::max(maxstep, rel);
        }
    }
    rep.band = (hi - lo) / ((hi + lo) / 2);
    rep.max_adjacent_change = maxstep;

    // direction against Gamma(1+P)^N / Gamma(1+dP)
    std::vector<Real> g1 = gamma_nilpotent(Real(0), Real(1), m);
    std::vector<Real> gd = gamma_nilpotent(Real(0), Real(d), m);
    PVec target{g1.begin(), g1.end()};
    PVec acc(m, Real(0));
    acc[0] = 1;
    for (long j = 0; j < N; ++j) acc = pvec_mul(acc, target, m);
    acc = pvec_mul(acc, pvec_inv(PVec(gd.begin(), gd.end()), m), m);

    const auto& last = samples.back();
    rep.direction.resize(static_cast<size_t>(m));
    rep.gamma_direction.resize(static_cast<size_t>(m));
    Real resid(0);
    for (int i = 0; i < m; ++i) {
        rep.direction[static_cast<size_t>(i)] = last[static_cast<size_t>(i)] / last[0];
        rep.gamma_direction[static_cast<size_t>(i)] = Complex(acc[i] / acc[0]);
        Real diff = abs(rep.direction[static_cast<size_t>(i)] -
                        rep.gamma_direction[static_cast<size_t>(i)]);
        Real den = abs(rep.gamma_direction[static_cast<size_t>(i)]);
        if (den > 0) resid = std::max(resid, Real(diff / den));
    }
    rep.direction_residual = resid;
    return rep;
}

EstimateCheck verify_laplace_estimates(const RegularizedSeries& reg, const WeightSystem& ws,
                                       const LaplaceProfile& profile,
                                       const std::vector<Real>& us, ExecMode mode)
{
    auto base_cont = continue_ode(reg, ws, profile, mode);
    auto base = laplace_samples(reg, base_cont, profile, us, mode);

    LaplaceProfile fine = profile;
    fine.gl_nodes += 16;
    fine.step_fraction = profile.step_fraction / 2;
    auto fine_cont = continue_ode(reg, ws, fine, mode);
    auto refined = laplace_samples(reg, fine_cont, fine, us, mode);

    EstimateCheck ec;
    ec.max_delta = 0;
    ec.min_estimate = Real(1e300);
    ec.honored = true;
    for (size_t i = 0; i < us.size(); ++i) {
        for (size_t b = 0; b < reg.branches.size(); ++b) {
            Real delta = abs(base[i][b].value - refined[i][b].value);
            ec.max_delta = std::max(ec.max_delta, delta);
            ec.min_estimate = std::min(ec.min_estimate, base[i][b].error);
            if (delta > base[i][b].error) ec.honored = false;
        }
    }
    return ec;
}

} // namespace lgcorr
