#include "lgcorr/regularized.hpp"

namespace lgcorr {

namespace {

// float polynomials mod P^m
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

} // namespace

RegularizedSeries regularize_fano(const WeightSystem& ws, long order)
{
    if (ws.kappa() >= 0)
        throw std::invalid_argument("regularize_fano: requires kappa < 0");
    const long d = ws.degree;
    const long r = ws.fano_index();

    RegularizedSeries out;
    out.fano = true;
    out.var_power = r;
    out.radius_pow = Rat(int_pow(Int(r), r)) * Rat(int_pow(Int(d), d));
    for (long w : ws.weights) out.radius_pow /= Rat(int_pow(Int(w), w));
    out.radius = boost::multiprecision::pow(real_from_rat(out.radius_pow), Real(1) / Real(r));

    ExponentSum lg = fjrw_small_at_lg(ws, order);
    for (long k : narrow_set(ws)) {
        RegBranch b;
        b.label = k;
        b.p_index = 0;
        b.expo0 = Rat(r * (k + 1), d);
        b.step = r;
        for (long l = 0; l <= order; ++l) {
            Rat a = lg.coeff(Rat(k), -(Rat(l) + Rat(k + 1, d))).eval_z(Rat(1)).coeff(0);
            Real formal = real_from_rat(a);
            Rat s = Rat(r) * (Rat(l) + Rat(k + 1, d));
            Real reg = formal / tgamma(real_from_rat(s) + 1);
            b.coeff.push_back({reg});
            b.formal.push_back({formal});
        }
        out.branches.push_back(std::move(b));
    }
    return out;
}

RegularizedSeries regularize_gt(const WeightSystem& ws, long order)
{
    const long kap = ws.kappa();
    if (kap <= 0)
        throw std::invalid_argument("regularize_gt: requires kappa > 0");
    const long d = ws.degree;

    RegularizedSeries out;
    out.fano = false;
    out.var_power = kap;
    out.radius_pow = Rat(int_pow(Int(kap), kap)) / Rat(int_pow(Int(d), d));
    for (long w : ws.weights) out.radius_pow *= Rat(int_pow(Int(w), w));
    out.radius = boost::multiprecision::pow(real_from_rat(out.radius_pow), Real(1) / Real(kap));

    long sector_index = -1;
    for (const Rat& f : ambient_sectors(ws)) {
        ++sector_index;
        const int m = sector_p_trunc(ws, f);
        if (m <= 0) continue;
        const Rat fbar = frac(Rat(1) - f);
        const Real fbar_num = real_from_rat(fbar);

        // exact rational P-polynomials A_n(P) built by the telescoping ratio
        std::vector<NilpotentPoly> An;
        NilpotentPoly cur(Rat(1), m);
        An.push_back(cur);
        for (long n = 1; n <= order; ++n) {
            for (long b = d * (n - 1) + 1; b <= d * n; ++b) {
                NilpotentPoly factor = NilpotentPoly::variable(m) * Rat(d);
                factor += NilpotentPoly(Rat(d) * fbar + b, m);
                cur = cur * factor;
            }
            for (long w : ws.weights) {
                for (long b = w * (n - 1) + 1; b <= w * n; ++b) {
                    NilpotentPoly factor = NilpotentPoly::variable(m) * Rat(w);
                    factor += NilpotentPoly(Rat(w) * fbar + b, m);
                    cur = cur * factor.inverse();
                }
            }
            An.push_back(cur);
        }

        // one branch per P-component of this sector
        for (int i = 0; i < m; ++i) {
            RegBranch b;
            b.label = sector_index;
            b.sector = f;
            b.p_index = i;
            b.expo0 = Rat(kap) * fbar;
            b.step = kap;
            out.branches.push_back(std::move(b));
        }

        // Borel divisor 1/Gamma(1+kappa(n+fbar+P)), advanced by the exact
        // integer-gap rising product per step
        PVec gam = gamma_nilpotent(Real(kap) * fbar_num, Real(kap), m);
        for (long n = 0; n <= order; ++n) {
            if (n > 0) {
                for (long b = 1; b <= kap; ++b) {
                    PVec factor(m, Real(0));
                    factor[0] = Real(kap) * (Real(static_cast<long>(n - 1)) + fbar_num) + b;
                    if (m > 1) factor[1] = kap;
                    gam = pvec_mul(gam, factor, m);
                }
            }
            PVec ginv = pvec_inv(gam, m);
            PVec reg(m, Real(0)), formal(m, Real(0));
            for (int i = 0; i < m; ++i) {
                formal[i] = real_from_rat(An[n].coeff(i));
                for (int j = 0; j <= i; ++j)
                    reg[i] += real_from_rat(An[n].coeff(j)) * ginv[i - j];
            }
            // dress with tau^{kappa P}: the P^i component carries log^j weights
            for (int i = 0; i < m; ++i) {
                RegBranch& br = out.branches[out.branches.size() - m + i];
                std::vector<Real> row(i + 1), frow(i + 1);
                Real kpow(1), fact(1);
                for (int j = 0; j <= i; ++j) {
                    if (j > 0) {
                        kpow *= kap;
                        fact *= j;
                    }
                    row[j] = reg[i - j] * kpow / fact;
                    frow[j] = formal[i - j] * kpow / fact;
                }
                br.coeff.push_back(std::move(row));
                br.formal.push_back(std::move(frow));
            }
        }
    }
    return out;
}

Real ratio_test(const RegBranch& b, long window)
{
    // consecutive ratios approach 1/radius like R (1 + g/l); the Richardson
    // combination (l+1) r_{l+1} - l r_l cancels the 1/l tail
    const long n = static_cast<long>(b.coeff.size());
    if (n < window + 3) throw std::invalid_argument("ratio_test: too few coefficients");
    Real acc(0);
    long used = 0;
    for (long i = n - window; i + 2 < n; ++i) {
        Real a0 = boost::multiprecision::abs(b.coeff[static_cast<size_t>(i)][0]);
        Real a1 = boost::multiprecision::abs(b.coeff[static_cast<size_t>(i + 1)][0]);
        Real a2 = boost::multiprecision::abs(b.coeff[static_cast<size_t>(i + 2)][0]);
        if (a0 == 0 || a1 == 0) continue;
        Real rl = a1 / a0, rl1 = a2 / a1;
        acc += Real(i + 1) * rl1 - Real(i) * rl;
        ++used;
    }
    if (used == 0) throw std::runtime_error("ratio_test: zero coefficients");
    return acc / used;
}

} // namespace lgcorr
