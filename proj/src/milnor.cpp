#include "lgcorr/milnor.hpp"

namespace lgcorr {

namespace {

// dense integer polynomials in t
using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// exact division; throws if not divisible
Poly poly_div(const Poly& num, const Poly& den)
{
    Poly r = num;
    if (den.empty() || den.back() == 0) throw std::invalid_argument("poly_div: zero divisor");
    if (r.size() < den.size()) throw std::runtime_error("milnor: non-polynomial quotient");
    Poly q(r.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int c = r[i + den.size() - 1];
        if (c % den.back() != 0) throw std::runtime_error("milnor: non-polynomial quotient");
        q[i] = c / den.back();
        if (q[i] == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) r[i + j] -= q[i] * den[j];
    }
    for (const Int& c : r)
        if (c != 0) throw std::runtime_error("milnor: non-polynomial quotient");
    return q;
}

Poly cyclotomic_like(long e) // t^e - 1
{
    Poly p(e + 1, Int(0));
    p[0] = -1;
    p[e] = 1;
    return p;
}

} // namespace

MilnorData milnor_poincare(const std::vector<long>& weights, long degree)
{
    MilnorData md;
    long wsum = 0;
    Poly acc = {Int(1)};
    for (long w : weights) {
        if (w >= degree)
            throw std::invalid_argument("milnor_poincare: requires w_j < d");
        wsum += w;
        acc = poly_div(poly_mul(acc, cyclotomic_like(degree - w)), cyclotomic_like(w));
    }
    for (size_t e = 0; e < acc.size(); ++e) {
        if (acc[e] == 0) continue;
        if (acc[e] < 0) throw std::runtime_error("milnor: negative graded dimension");
        Rat charge = Rat(static_cast<long>(e) + wsum, degree);
        long dim = to_long(acc[e]);
        md.dims[charge] += dim;
        md.total += dim;
        if (is_integer(charge)) md.invariant_dims[charge] += dim;
    }
    return md;
}

MilnorData milnor_poincare(const WeightSystem& ws)
{
    return milnor_poincare(ws.weights, ws.degree);
}

MilnorData fermat_invariant_dims(const WeightSystem& ws, const SymmetryGroup& G,
                                 const GroupElement& gamma)
{
    if (!ws.fermat())
        throw std::invalid_argument("fermat_invariant_dims: polynomial is not a Fermat sum");
    const long d = ws.degree;
    std::vector<int> fixed = gamma.fixed_coords();

    MilnorData md;
    // enumerate monomials over the fixed coordinates
    std::vector<long> m(fixed.size(), 0);
    std::vector<long> top;
    top.reserve(fixed.size());
    for (int j : fixed) top.push_back(d / ws.weights[j] - 2);
    for (long t : top)
        if (t < 0) throw std::runtime_error("fermat_invariant_dims: degenerate exponent range");

    while (true) {
        Rat charge(0);
        for (size_t i = 0; i < fixed.size(); ++i)
            charge += Rat((m[i] + 1) * ws.weights[fixed[i]], d);
        md.dims[charge] += 1;
        md.total += 1;
        bool inv = true;
        for (const auto& h : G.generators) {
            Rat ph(0);
            for (size_t i = 0; i < fixed.size(); ++i)
                ph += Rat(m[i] + 1) * h.phases.at(fixed[i]);
            if (!is_integer(ph)) {
                inv = false;
                break;
            }
        }
        if (inv) md.invariant_dims[charge] += 1;

        // next multi-index
        size_t i = 0;
        while (i < m.size() && m[i] == top[i]) m[i++] = 0;
        if (i == m.size()) break;
        ++m[i];
    }
    return md;
}

MilnorData restricted_invariant_dims(const WeightSystem& ws, const GroupElement& gamma)
{
    std::vector<long> wfix;
    for (int j : gamma.fixed_coords()) wfix.push_back(ws.weights[j]);
    if (wfix.empty()) {
        // trivial fixed locus: relative cohomology of a point
        MilnorData md;
        md.dims[Rat(0)] = 1;
        md.invariant_dims[Rat(0)] = 1;
        md.total = 1;
        return md;
    }
    return milnor_poincare(wfix, ws.degree);
}

} // namespace lgcorr
