#include "lgcorr/laplace.hpp"

#include "lgcorr/mp_linalg.hpp"

#include <algorithm>
#include <mutex>

namespace lgcorr {

namespace {

// polynomial coefficient lists in the ray coordinate x, complex values
using XPoly = std::vector<Complex>;

struct CompanionOperator {
    int order;                 // n
    std::vector<XPoly> q;      // q[k] multiplies y^{(k)}, k = 0..n
};

// Stirling numbers of the second kind up to n
std::vector<std::vector<Int>> stirling2(int n)
{
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(n + 1, Int(0)));
    s[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k) s[m][k] = s[m - 1][k - 1] + Int(k) * s[m - 1][k];
    return s;
}

// Rewrite sum_a tau^a p_a(D) with D = tau d/dtau into sum_k Q_k(tau) d^k,
// multiplied through by tau^{-minpow} to clear negative powers, then
// substitute tau = e^{i 2 pi theta} x.
CompanionOperator companion(const DiffOperator& op, const Rat& theta_turns)
{
    int n = op.order();
    auto s2 = stirling2(n);
    std::map<long, std::map<int, Rat>>粗;
    std::map<std::pair<long, int>, Rat> acc; // (tau-power, k) -> coeff
    for (const auto& [a, p] : op.monomials()) {
        for (size_t m = 0; m < p.size(); ++m) {
            if (p[m] == 0) continue;
            for (int k = 0; k <= static_cast<int>(m); ++k) {
                if (s2[m][k] == 0) continue;
                acc[{a + k, k}] += p[m] * Rat(s2[m][k]);
            }
        }
    }
    long minpow = 0;
    for (const auto& [key, c] : acc) minpow = std::min(minpow, key.first);
    long maxpow = 0;
    for (const auto& [key, c] : acc) maxpow = std::max(maxpow, key.first - minpow);

    Complex phase = unit_phase(theta_turns);
    // tau^j = phase^j x^j; y^{(k)} in tau = phase^{-k} d^k/dx^k
    CompanionOperator out;
    out.order = n;
    out.q.assign(n + 1, XPoly(static_cast<size_t>(maxpow) + 1, Complex(Rat(0))));
    std::vector<Complex> phase_pow(static_cast<size_t>(maxpow + n) + 1);
    phase_pow[0] = Complex(Rat(1));
    for (size_t i = 1; i < phase_pow.size(); ++i) phase_pow[i] = phase_pow[i - 1] * phase;
    for (const auto& [key, c] : acc) {
        long j = key.first - minpow;
        int k = key.second;
        // coefficient of x^j d^k: phase^{j} / phase^{k} ... fold phase^{-k}
        Complex val = Complex(c) * phase_pow[static_cast<size_t>(j)] / phase_pow[static_cast<size_t>(k)];
        out.q[k][static_cast<size_t>(j)] += val;
    }
    return out;
}

// shift polynomial to s -> p(c + s) by Horner in (s + c)
XPoly xpoly_shift(const XPoly& p, const Real& c)
{
    XPoly out(p.size(), Complex(Rat(0)));
    for (size_t i = p.size(); i-- > 0;) {
        XPoly tmp(out.size(), Complex(Rat(0)));
        for (size_t j = 0; j < out.size(); ++j) {
            tmp[j] += out[j] * c;
            if (j + 1 < out.size()) tmp[j + 1] += out[j];
        }
        tmp[0] += p[i];
        out = std::move(tmp);
    }
    return out;
}

// local Taylor coefficients of the solution with seed jet y, y', ..., y^{(n-1)}
// at center c; expansion to length K
std::vector<Complex> taylor_coeffs(const CompanionOperator& cop, const Real& center,
                                   const std::vector<Complex>& jet, int K)
{
    const int n = cop.order;
    std::vector<XPoly> R(n + 1);
    for (int k = 0; k <= n; ++k) R[k] = xpoly_shift(cop.q[k], center);
    std::vector<Complex> c(static_cast<size_t>(K), Complex(Rat(0)));
    Real fact(1);
    for (int i = 0; i < n && i < K; ++i) {
        if (i > 0) fact *= i;
        c[static_cast<size_t>(i)] = jet[static_cast<size_t>(i)] / fact;
    }
    // falling factorial (m)_k = m (m-1) ... (m-k+1)
    auto falling = [](long m, int k) {
        Real r(1);
        for (int i = 0; i < k; ++i) r *= Real(m - i);
        return r;
    };
    Complex lead = R[n][0];
    if (abs(lead) == 0) throw std::runtime_error("ode: expansion at a singular point");
    for (long M = 0; M + n < K; ++M) {
        Complex s{Rat(0)};
        for (int k = 0; k <= n; ++k) {
            for (size_t i = 0; i < R[k].size(); ++i) {
                if (R[k][i].is_zero()) continue;
                long idx = M - static_cast<long>(i) + k;
                if (idx < 0 || idx >= static_cast<long>(K)) continue;
                if (k == n && i == 0) continue; // the unknown
                s += R[k][i] * c[static_cast<size_t>(idx)] * falling(idx, k);
            }
        }
        c[static_cast<size_t>(M + n)] = -(s / (lead * falling(M + n, n)));
    }
    return c;
}

Complex taylor_eval(const std::vector<Complex>& c, const Real& s)
{
    Complex r{Rat(0)};
    for (size_t i = c.size(); i-- > 0;) r = r * Complex(s) + c[i];
    return r;
}

std::vector<Complex> taylor_jet(const std::vector<Complex>& c, const Real& s, int nder)
{
    std::vector<Complex> jet(static_cast<size_t>(nder));
    std::vector<Complex> cur = c;
    Real fact(1);
    for (int der = 0; der < nder; ++der) {
        jet[static_cast<size_t>(der)] = taylor_eval(cur, s);
        // differentiate
        for (size_t i = 0; i + 1 < cur.size(); ++i) cur[i] = cur[i + 1] * Real(static_cast<long>(i + 1));
        cur.pop_back();
    }
    return jet;
}

// Gauss-Legendre nodes/weights on [-1,1]; cached per (n, precision)
const std::pair<std::vector<Real>, std::vector<Real>>& gl_rule(int n)
{
    static std::map<std::pair<int, unsigned>, std::pair<std::vector<Real>, std::vector<Real>>>
        cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, precision_bits());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Real> xs(n), wsv(n);
    Real pi = pi_value();
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev initial guess
        Real x = cos(pi * (i + Real(0.75)) / (n + Real(0.5)));
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre P_n and derivative via recurrence
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            Real dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (boost::multiprecision::abs(dx) <
                ldexp(Real(1), -static_cast<long>(precision_bits()) - 4))
                break;
        }
        Real p0(1), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        Real dp = n * (x * p1 - p0) / (x * x - 1);
        xs[static_cast<size_t>(i)] = x;
        wsv[static_cast<size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(key, std::make_pair(std::move(xs), std::move(wsv))).first->second;
}

DiffOperator regularized_operator(const WeightSystem& ws, bool fano)
{
    return build_pf(ws, fano ? PfForm::TauRegularizedFano : PfForm::TauRegularizedGt);
}

} // namespace

std::vector<Complex> regularized_singularities(const RegularizedSeries& reg)
{
    std::vector<Complex> out;
    const long p = reg.var_power;
    for (long k = 0; k < p; ++k) {
        Rat turns = reg.fano ? frac(Rat(1, 2) + Rat(k, p)) : Rat(k, p);
        out.push_back(Complex(reg.radius) * unit_phase(turns));
    }
    return out;
}

LaplaceProfile default_profile(const RegularizedSeries& reg)
{
    std::vector<Complex> sing = regularized_singularities(reg);
    LaplaceProfile prof;
    Real best(-1);
    Rat best_theta(0);
    for (long i = -96; i <= 96; ++i) {
        Rat theta(i, 400);
        Real dmin(1e30);
        for (const Complex& s : sing) {
            Real ang_s = atan2(s.im, s.re);
            Real dang = ang_s - 2 * pi_value() * real_from_rat(theta);
            Real pi = pi_value();
            while (dang > pi) dang -= 2 * pi;
            while (dang < -pi) dang += 2 * pi;
            Real dist = boost::multiprecision::abs(dang) >= pi / 2
                            ? abs(s)
                            : abs(s) * sin(boost::multiprecision::abs(dang));
            dmin = std::min(dmin, dist);
        }
        if (dmin > best * Real(1.0000001) ||
            (dmin > best * Real(0.9999999) &&
             boost::multiprecision::abs(real_from_rat(theta)) <
                 boost::multiprecision::abs(real_from_rat(best_theta)))) {
            best = dmin;
            best_theta = theta;
        }
    }
    prof.theta_turns = best_theta;
    prof.tau0 = reg.radius / 2;
    prof.T = prof.tau0 * 3;
    // the panel rule integrates local Taylor data whose coefficients decay
    // like 3^{-k}; the node count must grow with the precision target
    prof.gl_nodes = static_cast<int>(32 + precision_bits() / 5);
    prof.rel_budget = ldexp(Real(1), -static_cast<long>(precision_bits()) + 30);
    return prof;
}

std::vector<Complex> branch_series_jet(const RegBranch& b, const Rat& theta_turns,
                                       const Real& x, int nder)
{
    // terms: coef * x^{e} * (ln x + C)^{j}, differentiated termwise
    struct Term {
        Real e;
        int j;
        Complex coef;
    };
    Complex C(Real(0), 2 * pi_value() * real_from_rat(theta_turns));
    Complex ray_phase = unit_phase(theta_turns);
    std::vector<Term> terms;
    for (size_t n = 0; n < b.coeff.size(); ++n) {
        Real e = real_from_rat(b.expo0) + Real(static_cast<long>(n) * b.step);
        Complex tau_pow_phase = pow(ray_phase, e); // e^{i 2 pi theta e}
        for (size_t j = 0; j < b.coeff[n].size(); ++j) {
            if (b.coeff[n][j] == 0) continue;
            terms.push_back({e, static_cast<int>(j), tau_pow_phase * b.coeff[n][j]});
        }
    }
    Real lx = boost::multiprecision::log(x);
    std::vector<Complex> jet(static_cast<size_t>(nder));
    for (int der = 0; der < nder; ++der) {
        Complex v{Rat(0)};
        for (const Term& t : terms) {
            Complex lpow{Rat(1)};
            Complex lbase = Complex(lx) + C;
            for (int i = 0; i < t.j; ++i) lpow *= lbase;
            v += t.coef * lpow * Complex(boost::multiprecision::pow(x, t.e));
        }
        jet[static_cast<size_t>(der)] = v;
        // differentiate the term list: d/dx [c x^e L^j] = c e x^{e-1} L^j + c j x^{e-1} L^{j-1}
        std::vector<Term> next;
        next.reserve(terms.size() * 2);
        for (const Term& t : terms) {
            if (!(t.e == 0)) next.push_back({t.e - 1, t.j, t.coef * t.e});
            if (t.j > 0) next.push_back({t.e - 1, t.j - 1, t.coef * Real(t.j)});
        }
        terms = std::move(next);
    }
    return jet;
}

std::vector<BranchContinuation> continue_ode(const RegularizedSeries& reg,
                                             const WeightSystem& ws,
                                             const LaplaceProfile& profile,
                                             ExecMode mode)
{
    DiffOperator op = regularized_operator(ws, reg.fano);
    CompanionOperator cop = companion(op, profile.theta_turns);
    std::vector<Complex> sing = regularized_singularities(reg);
    Complex ray_phase = unit_phase(profile.theta_turns);
    const int n = cop.order;
    const int K = static_cast<int>(precision_bits() * 0.8) + 48;

    std::vector<BranchContinuation> out(reg.branches.size());
    parallel_for(static_cast<long>(reg.branches.size()), mode, [&](long bi) {
        const RegBranch& b = reg.branches[static_cast<size_t>(bi)];
        BranchContinuation bc;
        bc.branch = &b;
        bc.ode_error = 0;
        std::vector<Complex> jet = branch_series_jet(b, profile.theta_turns, profile.tau0, n);
        Real x = profile.tau0;
        while (x < profile.T) {
            Real rad = x; // distance to the singular point tau = 0
            for (const Complex& s : sing) rad = std::min(rad, abs(Complex(x) * ray_phase - s));
            Real h = rad * profile.step_fraction;
            if (x + h > profile.T) h = profile.T - x + profile.T * Real(1e-30);
            std::vector<Complex> c = taylor_coeffs(cop, x, jet, K);
            // local truncation estimate from the trailing coefficients
            Real tail(0);
            Real hp = boost::multiprecision::pow(h, K - 4);
            for (int i = K - 4; i < K; ++i) {
                tail += abs(c[static_cast<size_t>(i)]) * hp;
                hp *= h;
            }
            bc.ode_error += tail;
            bc.steps.push_back({x, h, std::move(c)});
            jet = taylor_jet(bc.steps.back().taylor, h, n);
            x += h;
        }
        out[static_cast<size_t>(bi)] = std::move(bc);
    });
    return out;
}

Complex ode_eval(const BranchContinuation& bc, const Real& x)
{
    for (const OdeStep& st : bc.steps) {
        if (x >= st.center && x <= st.center + st.h * Real(1.0000000001))
            return taylor_eval(st.taylor, x - st.center);
    }
    throw std::out_of_range("ode_eval: point not covered by the continuation");
}

Real wronskian_min(const RegularizedSeries& reg, const WeightSystem& ws,
                   const LaplaceProfile& profile)
{
    DiffOperator op = regularized_operator(ws, reg.fano);
    CompanionOperator cop = companion(op, profile.theta_turns);
    std::vector<Complex> sing = regularized_singularities(reg);
    Complex ray_phase = unit_phase(profile.theta_turns);
    const int n = cop.order;
    const int K = static_cast<int>(precision_bits() * 0.8) + 48;

    // unit-jet fundamental system
    std::vector<std::vector<Complex>> jets(static_cast<size_t>(n),
                                           std::vector<Complex>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) jets[static_cast<size_t>(i)][static_cast<size_t>(i)] = Complex(Rat(1));

    Real x = profile.tau0;
    Real minw(1e300);
    auto det_abs = [&](const std::vector<std::vector<Complex>>& m) {
        CMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        // product of R-diagonal from the singular values is overkill; use
        // the product of singular values as |det|
        Real p(1);
        for (const Real& s : singular_values(a)) p *= s;
        return p;
    };
    minw = std::min(minw, det_abs(jets));
    while (x < profile.T) {
        Real rad = x;
        for (const Complex& s : sing) rad = std::min(rad, abs(Complex(x) * ray_phase - s));
        Real h = rad * profile.step_fraction;
        if (x + h > profile.T) h = profile.T - x;
        for (int i = 0; i < n; ++i) {
            std::vector<Complex> c = taylor_coeffs(cop, x, jets[static_cast<size_t>(i)], K);
            jets[static_cast<size_t>(i)] = taylor_jet(c, h, n);
        }
        x += h;
        minw = std::min(minw, det_abs(jets));
    }
    return minw;
}

namespace {

// integral of x^p (ln x + C)^j over [0, X]
Complex log_moment(const Real& p, int j, const Complex& C, const Real& X)
{
    // I_j = X^{p+1} L^j/(p+1) - j/(p+1) I_{j-1}, L = ln X + C
    Complex L = Complex(boost::multiprecision::log(X)) + C;
    Complex xp1 = Complex(boost::multiprecision::pow(X, p + 1));
    Complex I{Rat(0)};
    Complex lp{Rat(1)};
    // iterate from j=0 upward
    Complex cur = xp1 / Complex(p + 1);
    for (int i = 1; i <= j; ++i) {
        lp *= L;
        cur = (xp1 * lp - Complex(Real(i)) * cur) / Complex(p + 1);
    }
    if (j == 0) cur = xp1 / Complex(p + 1);
    return cur;
}

} // namespace

LaplaceValue laplace_value(const RegBranch& b, const BranchContinuation& bc,
                           const LaplaceProfile& profile, const Real& u)
{
    const Rat theta = profile.theta_turns;
    Complex ray_phase = unit_phase(theta);
    Complex uprime = Complex(u) * ray_phase;
    const Real x0 = profile.tau0;
    Real cos_theta = cos(2 * pi_value() * real_from_rat(theta));

    Complex patch{Rat(0)};
    Real patch_err(0);
    bool pure_power = true;
    for (const auto& row : b.coeff)
        if (row.size() > 1) pure_power = false;

    if (theta == 0 && pure_power) {
        // incomplete-gamma route with the stable downward recurrence
        // gamma(a-1, x) = (gamma(a, x) + x^{a-1} e^{-x}) / (a-1)
        const long n = static_cast<long>(b.coeff.size());
        Real e0 = real_from_rat(b.expo0);
        Real ux = u * x0;
        Real a = e0 + Real((n - 1) * b.step) + 1;
        Real g = lower_incomplete_gamma(a, ux);
        Real xs = boost::multiprecision::pow(ux, a - 1) * boost::multiprecision::exp(-ux);
        std::vector<Real> gam(static_cast<size_t>(n));
        gam[static_cast<size_t>(n - 1)] = g;
        for (long i = n - 2; i >= 0; --i) {
            for (long st = 0; st < b.step; ++st) {
                g = (g + xs) / (a - 1);
                a -= 1;
                xs /= ux;
            }
            gam[static_cast<size_t>(i)] = g;
        }
        for (long i = 0; i < n; ++i) {
            Real s = e0 + Real(i * b.step);
            Real integral = gam[static_cast<size_t>(i)] / boost::multiprecision::pow(u, s + 1);
            patch += Complex(b.coeff[static_cast<size_t>(i)][0] * integral);
        }
        // series tail beyond the stored order: geometric decay inside the disk
        Real last = abs(Complex(b.coeff.back()[0])) *
                    boost::multiprecision::pow(x0, e0 + Real((n - 1) * b.step)) * x0;
        patch_err += last * 2;
    } else {
        // alternating exponential series with log moments
        Complex C(Real(0), 2 * pi_value() * real_from_rat(theta));
        for (size_t nn = 0; nn < b.coeff.size(); ++nn) {
            Real e = real_from_rat(b.expo0) + Real(static_cast<long>(nn) * b.step);
            Complex tau_phase = pow(ray_phase, e + 1); // includes the dtau phase
            for (size_t j = 0; j < b.coeff[nn].size(); ++j) {
                if (b.coeff[nn][j] == 0) continue;
                // integral_0^{x0} x^{e+m} (ln x + C)^j e^{-u' x}
                Complex total{Rat(0)};
                Complex upow{Rat(1)};
                Real mfact(1);
                for (long m = 0; m < 100000; ++m) {
                    if (m > 0) {
                        upow *= -uprime;
                        mfact *= m;
                    }
                    Complex mom = log_moment(e + Real(m), static_cast<int>(j), C, x0);
                    Complex term = upow * mom / Complex(mfact);
                    total += term;
                    if (m > 4 && abs(term) < abs(total) * profile.rel_budget * Real(0.01))
                        break;
                }
                patch += Complex(b.coeff[nn][j]) * tau_phase * total;
            }
        }
        Real last = 0;
        for (const Real& c : b.coeff.back()) last += boost::multiprecision::abs(c);
        patch_err += last * boost::multiprecision::pow(
                                x0, real_from_rat(b.expo0) +
                                        Real(static_cast<long>(b.coeff.size() - 1) * b.step)) *
                     x0 * (1 + boost::multiprecision::abs(boost::multiprecision::log(x0)));
    }

    // panel quadrature over the continuation, nodes against local Taylor data
    Complex panels{Rat(0)};
    Real quad_err(0);
    const auto& [gx, gw] = gl_rule(profile.gl_nodes);
    const auto& [gx2, gw2] = gl_rule(profile.gl_nodes + 8);
    for (const OdeStep& st : bc.steps) {
        // segments sized so u h_seg stays moderate for the rule
        long nseg = 1 + static_cast<long>(static_cast<double>(u) * static_cast<double>(st.h) /
                                          (1.2 * profile.gl_nodes));
        Real hseg = st.h / Real(nseg);
        for (long sgi = 0; sgi < nseg; ++sgi) {
            Real a = st.center + hseg * Real(sgi);
            auto integrate = [&](const std::vector<Real>& xs, const std::vector<Real>& wsv) {
                Complex acc{Rat(0)};
                for (size_t i = 0; i < xs.size(); ++i) {
                    Real xi = a + (xs[i] + 1) * hseg / 2;
                    Complex y = taylor_eval(st.taylor, xi - st.center);
                    Complex eterm = exp(-uprime * Complex(xi));
                    acc += Complex(wsv[i]) * y * eterm;
                }
                return acc * Complex(hseg / 2);
            };
            Complex v1 = integrate(gx, gw);
            Complex v2 = integrate(gx2, gw2);
            panels += v2 * ray_phase;
            quad_err += abs(v2 - v1);
        }
    }

    // exponential tail bound from the observed power-law growth at T
    Real T = profile.T;
    Complex yT = ode_eval(bc, T);
    Complex yT2 = ode_eval(bc, T * Real(0.93));
    Real beta(0);
    if (abs(yT2) > 0 && abs(yT) > 0)
        beta = boost::multiprecision::log(abs(yT) / abs(yT2)) / boost::multiprecision::log(Real(1) / Real(0.93));
    if (beta < 0) beta = 0;
    beta += 4; // safety margin on the power
    Real Cg = abs(yT) / boost::multiprecision::pow(T, beta) * 4;
    Real ucos = u * cos_theta;
    Real tail = Cg * upper_incomplete_gamma(beta + 1, ucos * T) /
                boost::multiprecision::pow(ucos, beta + 1);

    LaplaceValue lv;
    lv.value = (patch + panels) * Complex(u);
    lv.error = (patch_err + quad_err + tail +
                bc.ode_error * boost::multiprecision::exp(-ucos * profile.tau0)) *
               u;
    return lv;
}

std::vector<std::vector<LaplaceValue>> laplace_samples(
    const RegularizedSeries& reg, const std::vector<BranchContinuation>& cont,
    const LaplaceProfile& profile, const std::vector<Real>& us, ExecMode mode)
{
    std::vector<std::vector<LaplaceValue>> out(us.size());
    parallel_for(static_cast<long>(us.size()), mode, [&](long i) {
        std::vector<LaplaceValue> row;
        row.reserve(reg.branches.size());
        for (size_t bi = 0; bi < reg.branches.size(); ++bi)
            row.push_back(
                laplace_value(reg.branches[bi], cont[bi], profile, us[static_cast<size_t>(i)]));
        out[static_cast<size_t>(i)] = std::move(row);
    });
    return out;
}

Complex formal_term(const RegBranch& b, const Real& u, long n)
{
    if (n < 0 || n >= static_cast<long>(b.formal.size())) return Complex(Rat(0));
    Real s = real_from_rat(b.expo0) + Real(n * b.step);
    Real lu = boost::multiprecision::log(u);
    Complex acc{Rat(0)};
    Complex lpow{Rat(1)};
    for (size_t j = 0; j < b.formal[static_cast<size_t>(n)].size(); ++j) {
        if (j > 0) lpow *= Complex(-lu);
        acc += Complex(b.formal[static_cast<size_t>(n)][j]) * lpow;
    }
    return acc * Complex(boost::multiprecision::pow(u, -s));
}

Complex formal_partial_sum(const RegBranch& b, const Real& u, long mterms)
{
    Complex acc{Rat(0)};
    for (long n = 0; n < mterms; ++n) acc += formal_term(b, u, n);
    return acc;
}

std::vector<WatsonRow> watson_check(const RegularizedSeries& reg,
                                    const std::vector<BranchContinuation>& cont,
                                    const LaplaceProfile& profile,
                                    const std::vector<Real>& us, long mmax, ExecMode mode)
{
    auto samples = laplace_samples(reg, cont, profile, us, mode);
    std::vector<WatsonRow> rows;
    for (size_t ui = 0; ui < us.size(); ++ui) {
        for (size_t bi = 0; bi < reg.branches.size(); ++bi) {
            const RegBranch& b = reg.branches[bi];
            for (long m = 0; m <= mmax; ++m) {
                WatsonRow row;
                row.branch_index = static_cast<long>(bi);
                row.u = us[ui];
                row.m = m;
                row.error = abs(samples[ui][bi].value - formal_partial_sum(b, us[ui], m + 1));
                row.next_term = abs(formal_term(b, us[ui], m + 1));
                row.ratio = row.next_term > 0 ? Real(row.error / row.next_term) : Real(0);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace lgcorr
