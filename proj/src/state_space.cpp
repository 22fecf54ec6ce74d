#include "lgcorr/state_space.hpp"

#include "lgcorr/diagram.hpp"

#include <sstream>

namespace lgcorr {

long StateSpaceReport::total() const
{
    long s = 0;
    for (const auto& [n, dim] : graded) s += dim;
    return s;
}

long StateSpaceReport::dim_at(long n) const
{
    auto it = graded.find(2 * n);
    return it == graded.end() ? 0 : it->second;
}

std::map<Rat, long> broad_sector_dims(const WeightSystem& ws, const SymmetryGroup& G,
                                      const GroupElement& gamma,
                                      const BroadOverrides* overrides)
{
    if (overrides) {
        auto it = overrides->find(gamma);
        if (it != overrides->end()) return it->second;
    }
    if (ws.fermat()) return fermat_invariant_dims(ws, G, gamma).invariant_dims;
    if (G.order() == ws.degree) return restricted_invariant_dims(ws, gamma).invariant_dims;
    throw std::runtime_error(
        "broad-sector dimensions unavailable: non-Fermat polynomial with G larger than <J_W>; "
        "supply per-sector overrides in the problem file");
}

namespace {

long doubled_degree(const Rat& p, const Rat& q)
{
    Rat n2 = 2 * (p - q);
    if (!is_integer(n2))
        throw std::runtime_error("state space: bidegree difference not half-integral");
    return to_long(rat_num(n2));
}

void add_contribution(StateSpaceReport& rep, SectorContribution c)
{
    if (c.dim == 0) return;
    rep.graded[doubled_degree(c.p, c.q)] += c.dim;
    rep.contributions.push_back(std::move(c));
}

} // namespace

StateSpaceReport cr_state_space(const WeightSystem& ws, const SymmetryGroup& G,
                                const BroadOverrides* overrides)
{
    StateSpaceReport rep;
    rep.side = Side::CR;
    const long d = ws.degree;

    for (const GroupElement& g : coset_decomposition(ws, G)) {
        for (const Rat& f : sector_phases(ws, g)) {
            GroupElement gamma = twist(ws, g, f);
            const int nfix = gamma.fixed_count();
            const bool in_G = is_integer(Rat(d) * f);
            const Rat age = fjrw_age(gamma) - frac(Rat(d) * f);
            SectorLabel label{g, f, SectorOrigin::ChenRuan};

            const int hyper = in_G ? nfix - 1 : nfix;
            for (int i = 0; i < hyper; ++i)
                add_contribution(rep, {label, ContributionKind::HyperplanePower,
                                       Rat(i) + age, Rat(i) + age, 1});
            if (in_G) {
                for (const auto& [c, dim] : broad_sector_dims(ws, G, gamma, overrides)) {
                    Rat p = Rat(nfix - 1) - c + age;
                    Rat q = c - 1 + age;
                    add_contribution(rep, {label, ContributionKind::Broad, p, q, dim});
                }
            }
        }
    }

    if (ws.kappa() > 0) {
        rep.correction_dim = to_long(Int(G.order() / d) * ws.kappa());
        rep.graded[0] += rep.correction_dim;
    }
    return rep;
}

StateSpaceReport fjrw_state_space(const WeightSystem& ws, const SymmetryGroup& G,
                                  const BroadOverrides* overrides)
{
    StateSpaceReport rep;
    rep.side = Side::FJRW;
    const long d = ws.degree;
    const Rat qsum = ws.charge_sum();

    for (const GroupElement& g : coset_decomposition(ws, G)) {
        for (long m = 0; m < d; ++m) {
            Rat f(m, d);
            GroupElement gamma = twist(ws, g, f);
            const int nfix = gamma.fixed_count();
            const Rat shift = fjrw_age(gamma) - qsum;
            SectorLabel label{g, f, SectorOrigin::FJRW};

            if (nfix == 0) {
                add_contribution(rep, {label, ContributionKind::Narrow, shift, shift, 1});
            } else {
                for (const auto& [c, dim] : broad_sector_dims(ws, G, gamma, overrides)) {
                    Rat p = Rat(nfix) - c + shift;
                    Rat q = c + shift;
                    add_contribution(rep, {label, ContributionKind::Broad, p, q, dim});
                }
            }
        }
    }

    if (ws.kappa() < 0) {
        rep.correction_dim = to_long(Int(G.order() / d) * ws.fano_index());
        rep.graded[0] += rep.correction_dim;
    }
    return rep;
}

CorrespondenceReport verify_correspondence(const WeightSystem& ws, const SymmetryGroup& G,
                                           const BroadOverrides* overrides)
{
    CorrespondenceReport out;
    out.cr = cr_state_space(ws, G, overrides);
    out.fjrw = fjrw_state_space(ws, G, overrides);

    std::set<long> keys;
    for (const auto& [k, v] : out.cr.graded) keys.insert(k);
    for (const auto& [k, v] : out.fjrw.graded) keys.insert(k);
    for (long k : keys) {
        long a = out.cr.graded.count(k) ? out.cr.graded.at(k) : 0;
        long b = out.fjrw.graded.count(k) ? out.fjrw.graded.at(k) : 0;
        if (a != b) {
            std::ostringstream os;
            os << "graded dimension mismatch at 2n=" << k << ": CR=" << a << " FJRW=" << b;
            out.mismatches.push_back(os.str());
        }
    }

    for (const GroupElement& g : coset_decomposition(ws, G)) {
        Diagram dg = build_diagram(ws, g);
        CosetLedger led;
        led.coset = g;
        led.dots = dg.dot_total();
        led.rays = dg.ray_total();
        led.internal_dots = dg.internal_dots();
        led.empty_rays = dg.empty_rays();
        led.extremal_dots = dg.extremal_dots();
        led.nonempty_rays = dg.nonempty_rays();
        if (led.dots - led.rays != -ws.kappa()) {
            std::ostringstream os;
            os << "diagram ledger: D-R != -kappa for a coset (" << led.dots - led.rays << " vs "
               << -ws.kappa() << ")";
            out.mismatches.push_back(os.str());
        }
        if (led.extremal_dots != led.nonempty_rays)
            out.mismatches.push_back("diagram ledger: extremal dots do not match non-empty rays");
        out.ledger.push_back(led);
    }

    out.pass = out.mismatches.empty();
    return out;
}

} // namespace lgcorr
