#include "lgcorr/exponent_sum.hpp"

#include <set>
#include <sstream>

namespace lgcorr {

ExponentSum ExponentSum::eval_z(const Rat& z) const
{
    ExponentSum out(kind_, var_, p_shift_);
    for (const auto& [key, c] : terms_) {
        NilpotentPoly v = c.eval_z(z);
        if (!v.is_zero()) out.add_term(key.first, key.second, LaurentZ(0, v));
    }
    return out;
}

Rat ExponentSum::max_exponent() const
{
    Rat m(0);
    bool any = false;
    for (const auto& [key, c] : terms_) {
        (void)c;
        if (!any || key.second > m) m = key.second;
        any = true;
    }
    return m;
}

Rat ExponentSum::min_exponent() const
{
    Rat m(0);
    bool any = false;
    for (const auto& [key, c] : terms_) {
        (void)c;
        if (!any || key.second < m) m = key.second;
        any = true;
    }
    return m;
}

std::string ExponentSum::str() const
{
    std::ostringstream os;
    for (const auto& [key, c] : terms_) {
        os << (kind_ == SectorKind::LambdaPhase ? "1_{" : "phi_{") << key.first << "} "
           << var_ << "^" << key.second << (p_shift_ ? "+P" : "") << " : " << c.str() << "\n";
    }
    return os.str();
}

int sector_p_trunc(const WeightSystem& ws, const Rat& f)
{
    GroupElement id(std::vector<Rat>(ws.nvars(), Rat(0)));
    GroupElement gamma = twist(ws, id, f);
    int nfix = gamma.fixed_count();
    bool in_G = is_integer(Rat(ws.degree) * f);
    return in_G ? nfix - 1 : nfix;
}

std::vector<Rat> ambient_sectors(const WeightSystem& ws)
{
    GroupElement id(std::vector<Rat>(ws.nvars(), Rat(0)));
    return sector_phases(ws, id);
}

int ambient_rank(const WeightSystem& ws)
{
    int r = 0;
    for (const Rat& f : ambient_sectors(ws)) r += sector_p_trunc(ws, f);
    return r;
}

ExponentSum gw_small_i(const WeightSystem& ws, long order,
                       const std::map<Rat, int>* p_trunc)
{
    ExponentSum out(ExponentSum::SectorKind::LambdaPhase, "q", true);
    const long d = ws.degree;

    // exponents n >= 0 with n w_j integral for some j
    std::set<Rat> ns;
    for (long w : ws.weights)
        for (long k = 0; Rat(k, w) <= order; ++k) ns.insert(Rat(k, w));

    for (const Rat& n : ns) {
        Rat f = frac(-n);
        int m = sector_p_trunc(ws, f);
        if (p_trunc) {
            auto it = p_trunc->find(f);
            if (it != p_trunc->end()) m = it->second;
        }
        if (m <= 0) continue; // sector carries no ambient classes

        // numerator: product over 0 < b <= nd with <b> = <nd> of (dP + b z),
        // together with the overall factor z
        LaurentZ coeff(1, NilpotentPoly(Rat(1), m));
        for (Rat b = Rat(d) * n; b > 0; b -= 1) {
            LaurentZ factor(0, NilpotentPoly::variable(m) * Rat(d));
            factor.add_term(1, NilpotentPoly(b, m));
            coeff = coeff * factor;
        }
        // denominator: per weight, product over 0 < b <= n w_j of (w_j P + b z);
        // each factor is inverted exactly as (1/(bz)) (1 + (w_j/b) P/z)^{-1}
        for (long w : ws.weights) {
            for (Rat b = Rat(w) * n; b > 0; b -= 1) {
                NilpotentPoly unit(Rat(1), m);
                NilpotentPoly tail = NilpotentPoly::variable(m) * (Rat(w) / b);
                NilpotentPoly geom = (unit + tail).inverse();
                LaurentZ inv(m);
                for (int i = 0; i < m; ++i) {
                    Rat ci = geom.coeff(i);
                    if (ci == 0) continue;
                    NilpotentPoly pi(m);
                    pi.set_coeff(i, ci / b);
                    inv.add_term(-1 - i, pi);
                }
                coeff = coeff * inv;
            }
        }
        out.add_term(f, n, coeff);
    }
    return out;
}

ExponentSum fjrw_small_i(const WeightSystem& ws, long order, SmallConvention conv)
{
    ExponentSum out(ExponentSum::SectorKind::NarrowIndex, "t", false);
    const long d = ws.degree;
    for (long k : narrow_set(ws)) {
        for (long l = 0; l <= order; ++l) {
            const long M = d * l + k;
            Rat c = Rat(1) / Rat(factorial(M));
            long zpow = 1 - M;
            for (long w : ws.weights) {
                Rat qj(w, d);
                long fl = to_long(rat_floor(qj * M));
                Rat base = qj + frac(qj * Rat(k));
                for (long i = 0; i < fl; ++i) c *= base + i;
                zpow += fl;
            }
            long tpow = conv == SmallConvention::TPower ? M + 1 : M;
            LaurentZ coeff(zpow, NilpotentPoly(c, 1));
            out.add_term(Rat(k), Rat(tpow), coeff);
        }
    }
    return out;
}

ExponentSum fjrw_small_at_lg(const WeightSystem& ws, long order)
{
    ExponentSum small = fjrw_small_i(ws, order, SmallConvention::TPower);
    ExponentSum out(ExponentSum::SectorKind::NarrowIndex, "q", false);
    const Rat dinv(1, ws.degree);
    for (const auto& [key, c] : small.terms()) {
        NilpotentPoly v = c.eval_z(Rat(-1));
        if (!v.is_zero()) out.add_term(key.first, -key.second * dinv, LaurentZ(0, v));
    }
    return out;
}

ExponentSum restore_z(const WeightSystem& ws, const ExponentSum& small_at_z1)
{
    if (small_at_z1.sector_kind() != ExponentSum::SectorKind::NarrowIndex)
        throw std::invalid_argument("restore_z expects a small FJRW series");
    ExponentSum out(ExponentSum::SectorKind::NarrowIndex, small_at_z1.var(), false);
    const Rat rd = Rat(-ws.kappa(), ws.degree); // r/d
    for (const auto& [key, c] : small_at_z1.terms()) {
        const Rat& k = key.first;
        const Rat& e = key.second;
        Rat gr(0);
        for (long w : ws.weights) gr += frac(k * Rat(w, ws.degree));
        Rat zpow = Rat(1) - rd - gr + rd * e;
        if (!is_integer(zpow))
            throw std::runtime_error("restore_z: non-integral z-power");
        for (const auto& [zp, poly] : c.terms()) {
            if (zp != 0)
                throw std::invalid_argument("restore_z: input must be a z=1 specialization");
            out.add_term(k, e, LaurentZ(to_long(rat_num(zpow)), poly));
        }
    }
    return out;
}

} // namespace lgcorr
