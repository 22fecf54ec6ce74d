#include "lgcorr/diff_operator.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lgcorr {

namespace {

void dpoly_trim(DPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

DPoly dpoly_mul(const DPoly& a, const DPoly& b)
{
    if (a.empty() || b.empty()) return {};
    DPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    dpoly_trim(r);
    return r;
}

DPoly dpoly_add(const DPoly& a, const DPoly& b)
{
    DPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    dpoly_trim(r);
    return r;
}

DPoly dpoly_shift(const DPoly& p, const Rat& s)
{
    // p(D+s) = sum_i p_i (D+s)^i
    DPoly acc{Rat(1)};
    DPoly res;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) {
            DPoly term = acc;
            for (auto& c : term) c *= p[i];
            res = dpoly_add(res, term);
        }
        acc = dpoly_mul(acc, DPoly{s, Rat(1)});
    }
    return res;
}

NilpotentPoly dpoly_eval(const DPoly& p, const NilpotentPoly& arg)
{
    NilpotentPoly r(arg.trunc());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = r * arg;
        r += NilpotentPoly(*it, arg.trunc());
    }
    return r;
}

Rat dpoly_eval(const DPoly& p, const Rat& arg)
{
    Rat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * arg + *it;
    return r;
}

int DiffOperator::order() const
{
    int o = 0;
    for (const auto& [a, p] : monomials_) o = std::max(o, static_cast<int>(p.size()) - 1);
    return o;
}

void DiffOperator::add_monomial(long xpow, const DPoly& p)
{
    DPoly q = p;
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.empty()) return;
    auto [it, fresh] = monomials_.try_emplace(xpow, q);
    if (!fresh) {
        it->second = dpoly_add(it->second, q);
        if (it->second.empty()) monomials_.erase(it);
    }
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const
{
    DiffOperator r(var_);
    r.monomials_ = monomials_;
    for (const auto& [a, p] : o.monomials_) r.add_monomial(a, p);
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const
{
    return *this + o.scaled(Rat(-1));
}

DiffOperator DiffOperator::operator*(const DiffOperator& o) const
{
    DiffOperator r(var_);
    for (const auto& [a, p] : monomials_) {
        for (const auto& [b, q] : o.monomials_) {
            r.add_monomial(a + b, dpoly_mul(dpoly_shift(p, Rat(b)), q));
        }
    }
    return r;
}

DiffOperator DiffOperator::scaled(const Rat& c) const
{
    DiffOperator r(var_);
    if (c == 0) return r;
    for (const auto& [a, p] : monomials_) {
        DPoly q = p;
        for (auto& x : q) x *= c;
        r.monomials_.emplace(a, q);
    }
    return r;
}

std::string DiffOperator::str() const
{
    if (monomials_.empty()) return "0";
    std::ostringstream os;
    bool first_mono = true;
    for (const auto& [a, p] : monomials_) {
        if (!first_mono) os << " + ";
        first_mono = false;
        os << var_ << "^" << a << " * (";
        bool first = true;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << p[i];
            if (i == 1) os << "*D";
            else if (i > 1) os << "*D^" << i;
        }
        os << ")";
    }
    return os.str();
}

namespace {

DPoly linear(const Rat& a, const Rat& b) // b + a D
{
    return DPoly{b, a};
}

DPoly product_over_weights(const WeightSystem& ws, const Rat& scale_num_div)
{
    // prod_j prod_{c=0}^{w_j-1} (scale*w_j D - c), with scale = 1/scale_num_div
    DPoly p{Rat(1)};
    for (long w : ws.weights)
        for (long c = 0; c < w; ++c)
            p = dpoly_mul(p, linear(Rat(w) / scale_num_div, Rat(-c)));
    return p;
}

} // namespace

DiffOperator build_pf(const WeightSystem& ws, PfForm form)
{
    const long d = ws.degree;
    const long kap = ws.kappa();
    const long r = -kap;

    switch (form) {
    case PfForm::Q: {
        DiffOperator op("q");
        op.add_monomial(0, product_over_weights(ws, Rat(1)));
        DPoly rhs{Rat(1)};
        for (long c = 1; c <= d; ++c) rhs = dpoly_mul(rhs, linear(Rat(d), Rat(c)));
        DiffOperator qrhs("q");
        qrhs.add_monomial(1, rhs);
        return op - qrhs;
    }
    case PfForm::TGeneralType: {
        DiffOperator op("t");
        DPoly lhs{Rat(1)};
        for (long j = 0; j < ws.nvars(); ++j)
            for (long c = 0; c < ws.weights[j]; ++c)
                lhs = dpoly_mul(lhs, linear(Rat(-ws.weights[j], d), Rat(-c)));
        op.add_monomial(d, lhs);
        DPoly rhs{Rat(1)};
        for (long c = 1; c <= d; ++c) rhs = dpoly_mul(rhs, linear(Rat(-1), Rat(c)));
        DiffOperator sub("t");
        sub.add_monomial(0, rhs);
        return op - sub;
    }
    case PfForm::UMassive: {
        if (kap >= 0)
            throw std::invalid_argument("build_pf: u-form requires kappa < 0");
        DiffOperator op("u");
        op.add_monomial(0, product_over_weights(ws, Rat(r)));
        DPoly rhs{Rat(1)};
        for (long c = 1; c <= d; ++c) rhs = dpoly_mul(rhs, linear(Rat(d, r), Rat(c)));
        DiffOperator urhs("u");
        urhs.add_monomial(r, rhs);
        return op - urhs;
    }
    case PfForm::TauRegularizedFano: {
        if (kap >= 0)
            throw std::invalid_argument("build_pf: regularized Fano form requires kappa < 0");
        DiffOperator op("tau");
        DPoly lhs{Rat(1)};
        for (long j = 0; j < ws.nvars(); ++j)
            for (long c = 0; c < ws.weights[j]; ++c)
                lhs = dpoly_mul(lhs, linear(Rat(-ws.weights[j], r), Rat(-c)));
        op.add_monomial(0, lhs);
        DPoly rhs{Rat(1)};
        for (long c = 0; c < r; ++c) rhs = dpoly_mul(rhs, linear(Rat(1), Rat(-c)));
        for (long c = 1; c <= d; ++c) rhs = dpoly_mul(rhs, linear(Rat(-d, r), Rat(c)));
        DiffOperator sub("tau");
        sub.add_monomial(-r, rhs);
        return op - sub;
    }
    case PfForm::TauRegularizedGt: {
        if (kap <= 0)
            throw std::invalid_argument("build_pf: regularized general-type form requires kappa > 0");
        DiffOperator op("tau");
        DPoly lhs{Rat(1)};
        for (long c = 0; c < kap; ++c) lhs = dpoly_mul(lhs, linear(Rat(1), Rat(-c)));
        for (long j = 0; j < ws.nvars(); ++j)
            for (long c = 0; c < ws.weights[j]; ++c)
                lhs = dpoly_mul(lhs, linear(Rat(ws.weights[j], kap), Rat(-c)));
        op.add_monomial(0, lhs);
        DPoly rhs{Rat(1)};
        for (long c = 1; c <= d; ++c) rhs = dpoly_mul(rhs, linear(Rat(d, kap), Rat(c)));
        DiffOperator sub("tau");
        sub.add_monomial(kap, rhs);
        return op - sub;
    }
    }
    throw std::logic_error("build_pf: unknown form");
}

DiffOperator build_pf_reduced(const WeightSystem& ws)
{
    const long d = ws.degree;
    // left roots c/w_j, right roots c/d (after moving q to the left)
    std::multiset<Rat> left, right;
    for (long w : ws.weights)
        for (long c = 0; c < w; ++c) left.insert(Rat(c, w));
    for (long c = 0; c < d; ++c) right.insert(Rat(c, d));

    std::multiset<Rat> common;
    for (const Rat& rho : left)
        if (right.count(rho) > common.count(rho)) common.insert(rho);

    DPoly lhs{Rat(1)};
    {
        std::multiset<Rat> cancel = common;
        for (long w : ws.weights)
            for (long c = 0; c < w; ++c) {
                Rat rho(c, w);
                auto it = cancel.find(rho);
                if (it != cancel.end()) {
                    cancel.erase(it);
                    lhs = dpoly_mul(lhs, DPoly{Rat(w)}); // keep the scalar w
                } else {
                    lhs = dpoly_mul(lhs, linear(Rat(w), Rat(-c)));
                }
            }
    }
    DPoly rhs{Rat(1)};
    {
        std::multiset<Rat> cancel = common;
        for (long c = 0; c < d; ++c) {
            Rat rho(c, d);
            auto it = cancel.find(rho);
            if (it != cancel.end()) {
                cancel.erase(it);
                rhs = dpoly_mul(rhs, DPoly{Rat(d)});
            } else {
                rhs = dpoly_mul(rhs, linear(Rat(d), Rat(-c)));
            }
        }
    }

    DiffOperator op("q");
    op.add_monomial(0, lhs);
    DiffOperator qrhs("q");
    qrhs.add_monomial(1, dpoly_shift(rhs, Rat(1))); // move q back to the left of the factors
    // scalars: dividing both sides by prod(D - rho) keeps the w_j / d scalars;
    // normalize so the two sides keep their original integer scale
    return op - qrhs;
}

ExponentSum apply(const DiffOperator& op, const ExponentSum& f)
{
    ExponentSum out(f.sector_kind(), f.var(), f.p_shift());
    for (const auto& [key, coeff] : f.terms()) {
        const Rat& e = key.second;
        for (const auto& [a, p] : op.monomials()) {
            LaurentZ scaled(coeff.trunc());
            if (f.p_shift()) {
                NilpotentPoly arg = NilpotentPoly::variable(coeff.trunc());
                arg += NilpotentPoly(e, coeff.trunc());
                NilpotentPoly factor = dpoly_eval(p, arg);
                for (const auto& [zp, c] : coeff.terms()) scaled.add_term(zp, c * factor);
            } else {
                Rat factor = dpoly_eval(p, e);
                for (const auto& [zp, c] : coeff.terms()) scaled.add_term(zp, c * factor);
            }
            if (!scaled.is_zero()) out.add_term(key.first, e + a, scaled);
        }
    }
    return out;
}

bool annihilates_below(const ExponentSum& residual, const Rat& frontier)
{
    for (const auto& [key, c] : residual.terms()) {
        (void)c;
        if (key.second <= frontier) return false;
    }
    return true;
}

} // namespace lgcorr
