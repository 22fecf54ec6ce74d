#ifndef LGCORR_MIRROR_HPP
#define LGCORR_MIRROR_HPP

#include "lgcorr/big_i.hpp"

#include <limits>

namespace lgcorr {

// Genus-zero data extracted from the big I-function: positive z-powers are
// eliminated degree by degree with multipliers c_i(t,z) against z dI/dt_0^i,
// leaving J = z phi_0 + sum tau^h phi_h + O(1/z).
struct MirrorResult {
    std::vector<long> var_index; // slot i carries t_0^{var_index[i]}

    std::map<long, MultiSeries> j;     // J(tau(t), z) per phi-component, series in t
    std::map<long, MultiSeries> j_tau; // J re-expanded in its own argument tau
    std::map<long, MultiSeries> c;     // multipliers c_i(t, z), i in Nar
    std::map<long, MultiSeries> tau;   // the z^0-mode mirror map, per phi-label

    struct Invariant {
        std::vector<int> insertions; // multiplicity per variable slot
        long descendant = 0;         // k of tau_k(phi_eps)
        long output = 0;             // eps
        Rat value;
    };
    std::vector<Invariant> invariants;

    MultiSeries j_component(long phi) const;
    // look up one invariant (zero when absent)
    Rat invariant(const std::vector<int>& insertions, long descendant, long output) const;
};

// max_z_cancel bounds which positive z-powers are eliminated; the default
// removes them all (the unique multipliers).  Bounding it reproduces
// truncated-display conventions where the multipliers are only determined
// modulo higher z-corrections.
MirrorResult extract_j(const WeightSystem& ws, const BigIFunction& big_i, int order,
                       bool reverse_within_degree = false,
                       int max_z_cancel = std::numeric_limits<int>::max());

// (Re)read the invariants table from j_tau.
void read_invariants(const WeightSystem& ws, MirrorResult& result);

// Untwisted psi-integral value: (sum a_i)!/prod a_i! when sum a_i = n-3 and
// 2 + sum k_i = 0 mod d, zero otherwise.
Rat untwisted_oracle(const WeightSystem& ws, const std::vector<long>& phi_labels,
                     const std::vector<long>& descendants);

} // namespace lgcorr

#endif
