#ifndef LGCORR_WEIGHT_SYSTEM_HPP
#define LGCORR_WEIGHT_SYSTEM_HPP

#include "lgcorr/rational.hpp"

#include <optional>
#include <set>
#include <vector>

namespace lgcorr {

// Quasi-homogeneous weight data (w_1..w_N; d) with optional exponent matrix
// for the defining polynomial.  Charges are q_j = w_j/d.
struct WeightSystem {
    std::vector<long> weights;
    long degree = 0;
    // monomials[i][j] = exponent of x_j in the i-th monomial, if supplied
    std::optional<std::vector<std::vector<long>>> monomials;

    WeightSystem() = default;
    WeightSystem(std::vector<long> w, long d,
                 std::optional<std::vector<std::vector<long>>> mono = std::nullopt);

    int nvars() const { return static_cast<int>(weights.size()); }
    Rat charge(int j) const { return Rat(weights.at(j), degree); }
    Rat charge_sum() const;
    long weight_sum() const;
    long kappa() const { return degree - weight_sum(); }
    long fano_index() const { return -kappa(); }
    bool gorenstein() const;
    // Fermat means the supplied monomials are exactly { x_j^{d/w_j} }.
    // Without an exponent matrix a Gorenstein system is treated as Fermat.
    bool fermat() const;

    void validate() const;
};

// Diagonal symmetry as a vector of rational phases in [0,1).
struct GroupElement {
    std::vector<Rat> phases;

    GroupElement() = default;
    explicit GroupElement(std::vector<Rat> ph);

    int size() const { return static_cast<int>(phases.size()); }
    bool is_identity() const;
    GroupElement operator+(const GroupElement& o) const; // product of symmetries
    GroupElement operator-() const;                      // inverse
    bool operator==(const GroupElement& o) const { return phases == o.phases; }
    bool operator<(const GroupElement& o) const { return phases < o.phases; }

    // Number of coordinates fixed by this element.
    int fixed_count() const;
    std::vector<int> fixed_coords() const;
};

struct SymmetryGroup {
    std::vector<GroupElement> elements;   // sorted, closed, contains identity
    std::vector<GroupElement> generators;

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const GroupElement& g) const;
};

enum class SectorOrigin { ChenRuan, FJRW };

struct SectorLabel {
    GroupElement coset_rep;
    Rat lambda_phase;    // f with lambda = e^{2 pi i f}
    SectorOrigin origin = SectorOrigin::ChenRuan;
};

// W leaves W invariant under J_W = (e^{2 pi i w_1/d}, ..., e^{2 pi i w_N/d}).
GroupElement j_element(const WeightSystem& ws);

long kappa(const WeightSystem& ws);

// Nar = { k in {0..d-1} : (k+1) w_j not in dZ for all j }.
std::set<long> narrow_set(const WeightSystem& ws);

// Group element gamma = g * lambda-bar with lambda = e^{2 pi i f}.
GroupElement twist(const WeightSystem& ws, const GroupElement& g, const Rat& f);

// FJRW age: sum of phases.
Rat fjrw_age(const GroupElement& g);

// Age of the sector g*lambda-bar acting on the hypersurface tangent space,
// computed by the closed form sum_j <theta_j + w_j f> - <d f>.
Rat cr_age_hypersurface(const WeightSystem& ws, const GroupElement& g, const Rat& f);
Rat cr_age_hypersurface(const WeightSystem& ws, const Rat& f); // g = identity

// deg_FJRW(phi_k) = 2 sum_j <k w_j / d>.
Rat fjrw_degree(const WeightSystem& ws, long k);

// Closure of a generating set under addition mod 1.  Throws if J_W is
// missing after closure or if the order exceeds the cap.
SymmetryGroup close_group(const WeightSystem& ws,
                          const std::vector<GroupElement>& generators,
                          long order_cap = 100000);

// M = |G|/d representatives of the <J_W> cosets, identity first.
std::vector<GroupElement> coset_decomposition(const WeightSystem& ws, const SymmetryGroup& G);

// All lambda-phases f in [0,1) with <theta_j + w_j f> = 0 for some j,
// i.e. the sectors of the g-coset with nontrivial fixed locus.
std::vector<Rat> sector_phases(const WeightSystem& ws, const GroupElement& g);

// Exact multiplicative order of g (smallest m >= 1 with m*g = 0 mod 1).
long element_order(const GroupElement& g);

} // namespace lgcorr

#endif
