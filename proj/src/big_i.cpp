#include "lgcorr/big_i.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lgcorr {

MultiSeries BigIFunction::component(long phi) const
{
    auto it = comps.find(phi);
    if (it != comps.end()) return it->second;
    return MultiSeries(nvars(), bound);
}

BigIFunction& BigIFunction::add(long phi, const MultiSeries::Key& key, const Rat& c)
{
    auto it = comps.find(phi);
    if (it == comps.end()) it = comps.emplace(phi, MultiSeries(nvars(), bound)).first;
    it->second.add_term(key, c);
    if (it->second.is_zero()) comps.erase(it);
    return *this;
}

namespace {

// enumerate multi-indices k with sum <= order
void enumerate(std::vector<int>& k, size_t pos, int budget,
               const std::function<void(const std::vector<int>&)>& fn)
{
    if (pos == k.size()) {
        fn(k);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        k[pos] = v;
        enumerate(k, pos + 1, budget - v, fn);
    }
    k[pos] = 0;
}

// prod_j prod_{0 <= b < q_j h, <b> = <q_j h>} (q_j + b), exact
Rat gamma_ratio_product(const WeightSystem& ws, long h)
{
    Rat c(1);
    for (long w : ws.weights) {
        Rat qj(w, ws.degree);
        Rat qh = qj * h;
        long fl = to_long(rat_floor(qh));
        Rat base = qj + frac(qh);
        for (long i = 0; i < fl; ++i) c *= base + i;
    }
    return c;
}

long floor_sum(const WeightSystem& ws, long h)
{
    long s = 0;
    for (long w : ws.weights) s += to_long(rat_floor(Rat(w * h, ws.degree)));
    return s;
}

} // namespace

BigIFunction fjrw_big_i(const WeightSystem& ws, int order)
{
    BigIFunction out;
    std::set<long> nar = narrow_set(ws);
    out.var_index.assign(nar.begin(), nar.end());
    out.bound = order;

    std::vector<int> k(out.var_index.size(), 0);
    enumerate(k, 0, order, [&](const std::vector<int>& kk) {
        long h = 0, norm = 0;
        Rat kfact(1);
        for (size_t i = 0; i < kk.size(); ++i) {
            h += out.var_index[i] * kk[i];
            norm += kk[i];
            kfact *= Rat(factorial(kk[i]));
        }
        long htil = ((h % ws.degree) + ws.degree) % ws.degree;
        if (!nar.count(htil)) return; // annihilation of non-narrow labels
        Rat c = gamma_ratio_product(ws, h) / kfact;
        long zpow = 1 - norm + floor_sum(ws, h);
        MultiSeries::Key key(kk.begin(), kk.end());
        key.push_back(static_cast<int>(zpow));
        out.add(htil, key, c);
    });
    return out;
}

BigIFunction untwisted_j(const WeightSystem& ws, int order)
{
    BigIFunction out;
    out.var_index.resize(ws.degree);
    for (long i = 0; i < ws.degree; ++i) out.var_index[i] = i;
    out.bound = order;

    std::vector<int> k(ws.degree, 0);
    enumerate(k, 0, order, [&](const std::vector<int>& kk) {
        long h = 0, norm = 0;
        Rat kfact(1);
        for (size_t i = 0; i < kk.size(); ++i) {
            h += static_cast<long>(i) * kk[i];
            norm += kk[i];
            kfact *= Rat(factorial(kk[i]));
        }
        long htil = h % ws.degree;
        MultiSeries::Key key(kk.begin(), kk.end());
        key.push_back(static_cast<int>(1 - norm));
        out.add(htil, key, Rat(1) / kfact);
    });
    return out;
}

BigIFunction big_from_small(const WeightSystem& ws, const ExponentSum& small, int order)
{
    if (small.sector_kind() != ExponentSum::SectorKind::NarrowIndex)
        throw std::invalid_argument("big_from_small expects the small FJRW I-function");
    std::set<long> nar = narrow_set(ws);
    if (!nar.count(1))
        throw std::invalid_argument("big_from_small: the slice variable t_0^1 must be narrow");

    BigIFunction out;
    out.var_index.assign(nar.begin(), nar.end());
    out.bound = order;
    const int nv = out.nvars();
    int slice_slot = static_cast<int>(
        std::find(out.var_index.begin(), out.var_index.end(), 1L) - out.var_index.begin());

    // free multi-indices over Nar \ {1}
    std::vector<long> free_vars;
    for (long i : out.var_index)
        if (i != 1) free_vars.push_back(i);

    for (const auto& [key, coeff] : small.terms()) {
        long k = to_long(rat_num(key.first));
        // interpret the small exponent on the big-slice lattice M = dl + k
        if (!is_integer(key.second)) continue;
        long M = to_long(rat_num(key.second)) - 1; // TPower convention stores M+1
        if (M < 0 || M > order) continue;
        Rat rm = gamma_ratio_product(ws, M);
        long fm = floor_sum(ws, M);
        (void)k;

        std::vector<int> kp(free_vars.size(), 0);
        enumerate(kp, 0, order - static_cast<int>(M), [&](const std::vector<int>& kk) {
            long h = M, extra = 0;
            Rat kfact(1);
            for (size_t i = 0; i < kk.size(); ++i) {
                h += free_vars[i] * kk[i];
                extra += kk[i];
                kfact *= Rat(factorial(kk[i]));
            }
            long htil = ((h % ws.degree) + ws.degree) % ws.degree;
            if (!nar.count(htil)) return; // annihilation operator
            Rat ratio = gamma_ratio_product(ws, h) / rm;
            long zshift = floor_sum(ws, h) - fm - extra;

            MultiSeries::Key big(nv + 1, 0);
            big[slice_slot] = static_cast<int>(M);
            for (size_t i = 0; i < kk.size(); ++i) {
                int slot = static_cast<int>(
                    std::find(out.var_index.begin(), out.var_index.end(), free_vars[i]) -
                    out.var_index.begin());
                big[slot] = kk[i];
            }
            for (const auto& [zp, poly] : coeff.terms()) {
                big[nv] = static_cast<int>(zp + zshift);
                out.add(htil, big, poly.coeff(0) * ratio / kfact);
            }
        });
    }
    return out;
}

} // namespace lgcorr
