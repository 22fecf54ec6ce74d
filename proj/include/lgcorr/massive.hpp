#ifndef LGCORR_MASSIVE_HPP
#define LGCORR_MASSIVE_HPP

#include "lgcorr/diff_operator.hpp"
#include "lgcorr/mp_complex.hpp"

#include <map>

namespace lgcorr {

// Element of Q[alpha]/(alpha^r - A0); alpha enters band polynomials only
// multiplicatively, so the quotient reduction keeps every cancellation exact
// even before a concrete root is chosen.
struct AlgNum {
    std::vector<Rat> c; // coefficients of alpha^0..alpha^{r-1}
    long r = 1;
    Rat a0;

    AlgNum() : c{Rat(0)}, r(1), a0(0) {}
    explicit AlgNum(const Rat& x) : c{x}, r(1), a0(0) {}
    AlgNum(long rr, const Rat& A0) : c(rr, Rat(0)), r(rr), a0(A0) {}
    static AlgNum generator(long rr, const Rat& A0)
    {
        AlgNum g(rr, A0);
        if (rr == 1) g.c[0] = A0; // alpha itself is rational
        else g.c[1] = Rat(1);
        return g;
    }

    bool is_zero() const
    {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    void match(const AlgNum& o)
    {
        if (r == 1 && a0 == 0 && o.r > 1) {
            Rat v = c[0];
            *this = AlgNum(o.r, o.a0);
            c[0] = v;
        }
    }
    AlgNum& operator+=(AlgNum o)
    {
        match(o);
        o.match(*this);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    AlgNum operator-() const
    {
        AlgNum r2 = *this;
        for (auto& x : r2.c) x = -x;
        return r2;
    }
    friend AlgNum operator*(AlgNum a, AlgNum b)
    {
        a.match(b);
        b.match(a);
        AlgNum out(a.r, a.a0);
        if (a.r == 1) {
            out.c[0] = a.c[0] * b.c[0];
            out.a0 = a.a0;
            return out;
        }
        std::vector<Rat> conv(2 * a.r - 1, Rat(0));
        for (long i = 0; i < a.r; ++i)
            for (long j = 0; j < a.r; ++j) conv[i + j] += a.c[i] * b.c[j];
        for (long i = 2 * a.r - 2; i >= a.r; --i)
            conv[i - a.r] += conv[i] * a.a0;
        out.c.assign(conv.begin(), conv.begin() + a.r);
        return out;
    }
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }

    Complex eval(const Complex& alpha) const
    {
        Complex v{Rat(0)};
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * alpha + Complex(*it);
        return v;
    }
    Rat eval(const Rat& alpha) const
    {
        Rat v(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * alpha + *it;
        return v;
    }
};

// Action of a D-operator on the ansatz e^{alpha u} u^{-lambda - n}: a finite
// collection of u-power shifts s, each carrying a polynomial in n.  Scalar S
// is AlgNum for the symbolic derivation and Rat/Complex for embeddings.
template <class S>
struct MassiveBand {
    std::map<long, std::vector<S>> shifts; // shift -> coefficients in n
    long smax = 0;
};

namespace detail {

template <class S>
std::vector<S> npoly_add(const std::vector<S>& a, const std::vector<S>& b)
{
    std::vector<S> r(std::max(a.size(), b.size()), S(Rat(0)));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

template <class S>
std::vector<S> npoly_mul_linear(const std::vector<S>& p, const S& c0, const S& c1)
{
    // p(n) * (c0 + c1 n)
    std::vector<S> r(p.size() + 1, S(Rat(0)));
    for (size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i] * c0;
        r[i + 1] += p[i] * c1;
    }
    return r;
}

template <class S>
S npoly_eval(const std::vector<S>& p, long n)
{
    S r{Rat(0)};
    S x{Rat(n)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

} // namespace detail

// Expand op . (e^{alpha u} u^{-lambda-n}) symbolically in n.  The operator
// must be in the u-variable normal form (monomials u^a p(D_u)).
template <class S>
MassiveBand<S> derive_massive_band(const DiffOperator& op, const S& alpha, const Rat& lambda)
{
    using State = std::map<long, std::vector<S>>;
    auto applyD = [&](const State& st) {
        State out;
        for (const auto& [s, p] : st) {
            // D [e^{au} u^{-lambda-n+s}] = a u^{+1} (...) + (-lambda-n+s)(...)
            auto& up = out[s + 1];
            std::vector<S> scaled(p.size(), S(Rat(0)));
            for (size_t i = 0; i < p.size(); ++i) scaled[i] = p[i] * alpha;
            up = detail::npoly_add(up, scaled);
            auto& same = out[s];
            same = detail::npoly_add(
                same, detail::npoly_mul_linear(p, S(Rat(s) - lambda), S(Rat(-1))));
        }
        return out;
    };

    // powers of D applied to the seed, up to the operator order
    int maxdeg = op.order();
    std::vector<State> dpow(static_cast<size_t>(maxdeg) + 1);
    dpow[0] = State{{0, {S(Rat(1))}}};
    for (int k = 1; k <= maxdeg; ++k) dpow[k] = applyD(dpow[k - 1]);

    State total;
    for (const auto& [a, p] : op.monomials()) {
        for (size_t k = 0; k < p.size(); ++k) {
            if (p[k] == 0) continue;
            for (const auto& [s, poly] : dpow[k]) {
                std::vector<S> scaled(poly.size(), S(Rat(0)));
                for (size_t i = 0; i < poly.size(); ++i) scaled[i] = poly[i] * S(p[k]);
                auto& slot = total[s + a];
                slot = detail::npoly_add(slot, scaled);
            }
        }
    }

    MassiveBand<S> band;
    for (auto& [s, poly] : total) {
        while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
        if (poly.empty()) continue; // e.g. the top slot killed by the root equation
        band.shifts.emplace(s, std::move(poly));
    }
    band.smax = band.shifts.empty() ? 0 : band.shifts.rbegin()->first;
    return band;
}

template <class S>
MassiveBand<S> embed_band(const MassiveBand<AlgNum>& band, const S& alpha)
{
    MassiveBand<S> out;
    for (const auto& [s, poly] : band.shifts) {
        std::vector<S> p;
        p.reserve(poly.size());
        for (const AlgNum& c : poly) p.push_back(c.eval(alpha));
        while (!p.empty() && p.back().is_zero()) p.pop_back();
        if (p.empty()) continue;
        out.shifts.emplace(s, std::move(p));
    }
    out.smax = out.shifts.empty() ? 0 : out.shifts.rbegin()->first;
    return out;
}

// Solve sum_s P_s(mu+s) a_{mu+s} = 0 with a_0 = 1.  The top slot must vanish
// identically at n = 0 (the root equation); this is checked for the exact path.
template <class S>
std::vector<S> solve_massive_recursion(const MassiveBand<S>& band, long nterms)
{
    std::vector<S> a{S(Rat(1))};
    const long smax = band.smax;
    for (long mu = -smax; static_cast<long>(a.size()) <= nterms; ++mu) {
        S top{Rat(0)};
        S tot{Rat(0)};
        bool have_top = false;
        for (const auto& [s, poly] : band.shifts) {
            long idx = mu + s;
            if (idx < 0) continue;
            S val = detail::npoly_eval(poly, idx);
            if (idx == mu + smax && idx == static_cast<long>(a.size())) {
                top = val;
                have_top = true;
            } else if (idx < static_cast<long>(a.size())) {
                tot += val * a[static_cast<size_t>(idx)];
            }
        }
        if (mu + smax == static_cast<long>(a.size())) {
            if (!have_top || top.is_zero())
                throw std::runtime_error("massive recursion: vanishing leading coefficient");
            a.push_back(-(tot / top));
        }
    }
    return a;
}

// Residual of the band relation on the computed coefficients; identically
// zero on the exact path and a roundoff-scale number on the numeric path.
template <class S>
std::vector<S> massive_band_residuals(const MassiveBand<S>& band, const std::vector<S>& a)
{
    std::vector<S> res;
    const long smax = band.smax;
    for (long mu = -smax; mu + smax < static_cast<long>(a.size()); ++mu) {
        S tot{Rat(0)};
        for (const auto& [s, poly] : band.shifts) {
            long idx = mu + s;
            if (idx < 0 || idx >= static_cast<long>(a.size())) continue;
            tot += detail::npoly_eval(poly, idx) * a[static_cast<size_t>(idx)];
        }
        res.push_back(tot);
    }
    return res;
}

struct MassiveSolution {
    int root_index = 0;     // alpha_j = rho e^{2 pi i j / r}
    bool exact = false;     // true when alpha_j is rational
    Rat alpha_rat;          // valid when exact
    Complex alpha_num;      // always set
    Rat lambda_exp;         // (N-2)/2
    std::vector<Rat> coeff_rat;      // exact path
    std::vector<Complex> coeff_num;  // numeric embedding, always set
};

// The r massive vacuum solutions at the Landau-Ginzburg point (kappa < 0):
// alpha^r = r^r d^d prod w_j^{-w_j}, lambda = (N-2)/2, coefficient recursions
// machine-derived from the u-form operator.
std::vector<MassiveSolution> massive_solutions(const WeightSystem& ws, long nterms);

// alpha^r as an exact rational.
Rat massive_alpha_power(const WeightSystem& ws);

struct FormalMonodromy {
    // e^{2 pi i phase} entries on the narrow basis, keyed by k
    std::vector<std::pair<long, Rat>> diag;
    long massive_block = 0; // r x r cyclic block
    Rat step_phase;          // scalar phase picked up per cyclic step
};

FormalMonodromy formal_monodromy(const WeightSystem& ws);

} // namespace lgcorr

#endif
