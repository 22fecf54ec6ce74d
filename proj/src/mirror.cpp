#include "lgcorr/mirror.hpp"

#include <algorithm>

namespace lgcorr {

MultiSeries MirrorResult::j_component(long phi) const
{
    auto it = j.find(phi);
    if (it != j.end()) return it->second;
    return MultiSeries(static_cast<int>(var_index.size()), 0);
}

Rat MirrorResult::invariant(const std::vector<int>& insertions, long descendant,
                            long output) const
{
    for (const auto& inv : invariants) {
        if (inv.insertions == insertions && inv.descendant == descendant &&
            inv.output == output)
            return inv.value;
    }
    return Rat(0);
}

namespace {

struct Offender {
    long comp;
    MultiSeries::Key key;
};

} // namespace

MirrorResult extract_j(const WeightSystem& ws, const BigIFunction& big_i, int order,
                       bool reverse_within_degree, int max_z_cancel)
{
    MirrorResult out;
    out.var_index = big_i.var_index;
    const int nv = big_i.nvars();
    const int bound = std::min(order, big_i.bound);

    std::map<long, MultiSeries> R;
    for (const auto& [phi, comp] : big_i.comps) R.emplace(phi, comp.truncate(bound));

    // z dI/dt_0^i per variable slot, with its t-degree-0 lead on phi_{var_index[i]}
    std::vector<std::map<long, MultiSeries>> deriv(nv);
    std::vector<int> lead_zpow(nv);
    std::vector<Rat> lead_coeff(nv);
    for (int i = 0; i < nv; ++i) {
        for (const auto& [phi, comp] : big_i.comps) {
            MultiSeries d = comp.truncate(bound).derivative(i).shift_z(1);
            if (!d.is_zero()) deriv[i].emplace(phi, std::move(d));
        }
        auto it = deriv[i].find(out.var_index[i]);
        if (it == deriv[i].end())
            throw std::runtime_error("extract_j: missing linear term in the I-function");
        bool found = false;
        for (const auto& [key, c] : it->second.terms()) {
            if (MultiSeries::tdeg(key) != 0) continue;
            if (found) throw std::runtime_error("extract_j: ambiguous leading term");
            lead_zpow[i] = key[nv];
            lead_coeff[i] = c;
            found = true;
        }
        if (!found) throw std::runtime_error("extract_j: missing leading term");
    }

    for (int i = 0; i < nv; ++i) out.c.emplace(out.var_index[i], MultiSeries(nv, bound));

    for (int deg = 0; deg <= bound; ++deg) {
        for (int pass = 0;; ++pass) {
            if (pass > bound + 2)
                throw std::runtime_error("extract_j: cancellation did not settle");
            std::vector<Offender> offenders;
            for (const auto& [phi, comp] : R) {
                for (const auto& [key, c] : comp.terms()) {
                    (void)c;
                    if (MultiSeries::tdeg(key) != deg) continue;
                    if (key[nv] < 1 || key[nv] > max_z_cancel) continue;
                    // the distinguished dilaton term z phi_0 stays
                    if (deg == 0 && phi == 0 && key[nv] == 1) continue;
                    offenders.push_back({phi, key});
                }
            }
            if (offenders.empty()) break;
            std::sort(offenders.begin(), offenders.end(),
                      [](const Offender& a, const Offender& b) {
                          return std::tie(a.comp, a.key) < std::tie(b.comp, b.key);
                      });
            if (reverse_within_degree) std::reverse(offenders.begin(), offenders.end());

            for (const auto& off : offenders) {
                // the value may have shifted under corrections earlier this pass
                Rat cur = R.at(off.comp).coeff(off.key);
                if (cur == 0) continue;
                int slot = -1;
                for (int i = 0; i < nv; ++i)
                    if (out.var_index[i] == off.comp) slot = i;
                if (slot < 0)
                    throw std::runtime_error("extract_j: offender on a non-variable component");
                int cpow = off.key[nv] - lead_zpow[slot];
                if (cpow < 0)
                    throw std::runtime_error(
                        "extract_j: offender not cancellable (z-power below the lead)");

                MultiSeries::Key ckey = off.key;
                ckey[nv] = cpow;
                Rat cval = -cur / lead_coeff[slot];
                out.c[off.comp].add_term(ckey, cval);

                MultiSeries mono = MultiSeries::monomial(cval, ckey, bound);
                for (const auto& [phi, dcomp] : deriv[slot]) {
                    auto it = R.find(phi);
                    if (it == R.end()) it = R.emplace(phi, MultiSeries(nv, bound)).first;
                    it->second += mono * dcomp;
                }
            }
        }
    }

    for (auto& [phi, comp] : R)
        if (!comp.is_zero()) out.j.emplace(phi, comp);
    for (const auto& [phi, comp] : out.j) {
        MultiSeries t0 = comp.z_slice(0);
        if (!t0.is_zero()) out.tau.emplace(phi, std::move(t0));
    }

    // invert the mirror map tau(t) = t + higher order, then re-expand J
    std::vector<MultiSeries> g(nv), h(nv);
    for (int i = 0; i < nv; ++i) {
        MultiSeries::Key k(nv + 1, 0);
        k[i] = 1;
        g[i] = MultiSeries::monomial(Rat(1), k, bound);
        auto it = out.tau.find(out.var_index[i]);
        MultiSeries taui = it == out.tau.end() ? MultiSeries(nv, bound) : it->second;
        h[i] = taui - g[i];
    }
    for (int iter = 0; iter <= bound; ++iter) {
        std::vector<MultiSeries> next(nv);
        for (int i = 0; i < nv; ++i) {
            MultiSeries::Key k(nv + 1, 0);
            k[i] = 1;
            next[i] = MultiSeries::monomial(Rat(1), k, bound) - h[i].compose(g);
        }
        g = std::move(next);
    }
    for (const auto& [phi, comp] : out.j) {
        MultiSeries jt = comp.compose(g);
        if (!jt.is_zero()) out.j_tau.emplace(phi, std::move(jt));
    }

    read_invariants(ws, out);
    return out;
}

void read_invariants(const WeightSystem& ws, MirrorResult& result)
{
    result.invariants.clear();
    const int nv = static_cast<int>(result.var_index.size());
    for (const auto& [phi, comp] : result.j_tau) {
        for (const auto& [key, c] : comp.terms()) {
            int zp = key[nv];
            if (zp > -1) continue;
            MirrorResult::Invariant inv;
            inv.insertions.assign(key.begin(), key.begin() + nv);
            inv.descendant = -zp - 1;
            inv.output = ((ws.degree - 2 - phi) % ws.degree + ws.degree) % ws.degree;
            Rat mult(1);
            for (int i = 0; i < nv; ++i) mult *= Rat(factorial(key[i]));
            inv.value = c * mult;
            result.invariants.push_back(std::move(inv));
        }
    }
}

Rat untwisted_oracle(const WeightSystem& ws, const std::vector<long>& phi_labels,
                     const std::vector<long>& descendants)
{
    if (phi_labels.size() != descendants.size())
        throw std::invalid_argument("untwisted_oracle: length mismatch");
    const long n = static_cast<long>(phi_labels.size());
    long asum = 0, ksum = 0;
    for (long a : descendants) {
        if (a < 0) throw std::invalid_argument("untwisted_oracle: negative descendant");
        asum += a;
    }
    for (long k : phi_labels) ksum += k;
    if (asum != n - 3) return Rat(0);
    if ((2 + ksum) % ws.degree != 0) return Rat(0);
    Rat v(factorial(asum));
    for (long a : descendants) v /= Rat(factorial(a));
    return v;
}

} // namespace lgcorr
