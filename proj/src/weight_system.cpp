#include "lgcorr/weight_system.hpp"

#include <algorithm>
#include <numeric>

namespace lgcorr {

WeightSystem::WeightSystem(std::vector<long> w, long d,
                           std::optional<std::vector<std::vector<long>>> mono)
    : weights(std::move(w)), degree(d), monomials(std::move(mono))
{
    validate();
}

Rat WeightSystem::charge_sum() const
{
    Rat s(0);
    for (long w : weights) s += Rat(w, degree);
    return s;
}

long WeightSystem::weight_sum() const
{
    return std::accumulate(weights.begin(), weights.end(), 0L);
}

bool WeightSystem::gorenstein() const
{
    return std::all_of(weights.begin(), weights.end(),
                       [&](long w) { return degree % w == 0; });
}

bool WeightSystem::fermat() const
{
    if (!monomials) return gorenstein();
    if (!gorenstein()) return false;
    if (monomials->size() != weights.size()) return false;
    std::vector<bool> seen(weights.size(), false);
    for (const auto& row : *monomials) {
        int var = -1;
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            if (var >= 0) return false;
            var = static_cast<int>(j);
        }
        if (var < 0 || seen[var]) return false;
        if (row[var] != degree / weights[var]) return false;
        seen[var] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void WeightSystem::validate() const
{
    if (weights.empty()) throw std::invalid_argument("weight system: no weights");
    if (degree <= 0) throw std::invalid_argument("weight system: degree must be positive");
    long g = 0;
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("weight system: weights must be positive");
        g = std::gcd(g, w);
    }
    if (g != 1) throw std::invalid_argument("weight system: gcd(w_1..w_N) must be 1");
    if (monomials) {
        for (const auto& row : *monomials) {
            if (row.size() != weights.size())
                throw std::invalid_argument("weight system: exponent row arity mismatch");
            long deg = 0;
            for (size_t j = 0; j < row.size(); ++j) {
                if (row[j] < 0) throw std::invalid_argument("weight system: negative exponent");
                deg += row[j] * weights[j];
            }
            if (deg != degree)
                throw std::invalid_argument("weight system: monomial not quasi-homogeneous of degree d");
        }
    }
}

GroupElement::GroupElement(std::vector<Rat> ph) : phases(std::move(ph))
{
    for (auto& p : phases) p = frac(p);
}

bool GroupElement::is_identity() const
{
    return std::all_of(phases.begin(), phases.end(), [](const Rat& p) { return p == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& o) const
{
    if (phases.size() != o.phases.size())
        throw std::invalid_argument("group element arity mismatch");
    std::vector<Rat> r(phases.size());
    for (size_t j = 0; j < phases.size(); ++j) r[j] = frac(phases[j] + o.phases[j]);
    return GroupElement(std::move(r));
}

GroupElement GroupElement::operator-() const
{
    std::vector<Rat> r(phases.size());
    for (size_t j = 0; j < phases.size(); ++j) r[j] = frac(-phases[j]);
    return GroupElement(std::move(r));
}

int GroupElement::fixed_count() const
{
    return static_cast<int>(std::count(phases.begin(), phases.end(), Rat(0)));
}

std::vector<int> GroupElement::fixed_coords() const
{
    std::vector<int> r;
    for (size_t j = 0; j < phases.size(); ++j)
        if (phases[j] == 0) r.push_back(static_cast<int>(j));
    return r;
}

bool SymmetryGroup::contains(const GroupElement& g) const
{
    return std::binary_search(elements.begin(), elements.end(), g);
}

GroupElement j_element(const WeightSystem& ws)
{
    std::vector<Rat> ph;
    ph.reserve(ws.weights.size());
    for (long w : ws.weights) ph.push_back(frac(Rat(w, ws.degree)));
    return GroupElement(std::move(ph));
}

long kappa(const WeightSystem& ws) { return ws.kappa(); }

std::set<long> narrow_set(const WeightSystem& ws)
{
    std::set<long> nar;
    for (long k = 0; k < ws.degree; ++k) {
        bool narrow = true;
        for (long w : ws.weights) {
            if (((k + 1) * w) % ws.degree == 0) {
                narrow = false;
                break;
            }
        }
        if (narrow) nar.insert(k);
    }
    return nar;
}

GroupElement twist(const WeightSystem& ws, const GroupElement& g, const Rat& f)
{
    std::vector<Rat> ph(ws.weights.size());
    for (size_t j = 0; j < ph.size(); ++j)
        ph[j] = frac(g.phases.at(j) + Rat(ws.weights[j]) * f);
    return GroupElement(std::move(ph));
}

Rat fjrw_age(const GroupElement& g)
{
    Rat s(0);
    for (const auto& p : g.phases) s += p;
    return s;
}

Rat cr_age_hypersurface(const WeightSystem& ws, const GroupElement& g, const Rat& f)
{
    GroupElement gamma = twist(ws, g, f);
    if (gamma.fixed_count() == 0)
        throw std::invalid_argument("cr_age_hypersurface: empty sector (no fixed coordinate)");
    return fjrw_age(gamma) - frac(Rat(ws.degree) * f);
}

Rat cr_age_hypersurface(const WeightSystem& ws, const Rat& f)
{
    GroupElement id(std::vector<Rat>(ws.weights.size(), Rat(0)));
    return cr_age_hypersurface(ws, id, f);
}

Rat fjrw_degree(const WeightSystem& ws, long k)
{
    if (k < 0 || k >= ws.degree) throw std::out_of_range("fjrw_degree: k out of range");
    Rat s(0);
    for (long w : ws.weights) s += frac(Rat(k * w, ws.degree));
    return 2 * s;
}

SymmetryGroup close_group(const WeightSystem& ws,
                          const std::vector<GroupElement>& generators,
                          long order_cap)
{
    const int n = ws.nvars();
    GroupElement id(std::vector<Rat>(n, Rat(0)));
    std::vector<GroupElement> gens = generators;
    GroupElement j = j_element(ws);
    if (std::find(gens.begin(), gens.end(), j) == gens.end()) gens.push_back(j);
    for (const auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("group generator arity mismatch");

    std::set<GroupElement> elems{id};
    std::vector<GroupElement> frontier{id};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                GroupElement h = e + g;
                if (elems.insert(h).second) {
                    next.push_back(h);
                    if (static_cast<long>(elems.size()) > order_cap)
                        throw std::runtime_error("close_group: order cap exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    SymmetryGroup G;
    G.elements.assign(elems.begin(), elems.end());
    G.generators = gens;
    return G;
}

std::vector<GroupElement> coset_decomposition(const WeightSystem& ws, const SymmetryGroup& G)
{
    GroupElement j = j_element(ws);
    if (!G.contains(j))
        throw std::invalid_argument("coset_decomposition: J_W not in G");
    if (G.order() % ws.degree != 0)
        throw std::invalid_argument("coset_decomposition: |G| not divisible by d");

    std::set<GroupElement> covered;
    std::vector<GroupElement> reps;
    GroupElement id(std::vector<Rat>(ws.nvars(), Rat(0)));
    // identity coset first for determinism
    std::vector<GroupElement> order = G.elements;
    std::swap(*std::find(order.begin(), order.end(), id), order.front());
    for (const auto& g : order) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        GroupElement h = g;
        for (long m = 0; m < ws.degree; ++m) {
            covered.insert(h);
            h = h + j;
        }
    }
    if (static_cast<long>(reps.size()) != G.order() / ws.degree)
        throw std::runtime_error("coset_decomposition: inconsistent coset count");
    return reps;
}

std::vector<Rat> sector_phases(const WeightSystem& ws, const GroupElement& g)
{
    std::set<Rat> out;
    for (size_t j = 0; j < ws.weights.size(); ++j) {
        for (long c = 0; c < ws.weights[j]; ++c) {
            out.insert(frac((Rat(c) - g.phases.at(j)) / Rat(ws.weights[j])));
        }
    }
    return {out.begin(), out.end()};
}

long element_order(const GroupElement& g)
{
    Int m(1);
    for (const auto& p : g.phases) m = lcm(m, rat_den(p));
    return to_long(m);
}

} // namespace lgcorr
