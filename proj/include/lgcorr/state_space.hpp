#ifndef LGCORR_STATE_SPACE_HPP
#define LGCORR_STATE_SPACE_HPP

#include "lgcorr/milnor.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgcorr {

enum class ContributionKind { HyperplanePower, Broad, Narrow };
enum class Side { CR, FJRW };

struct SectorContribution {
    SectorLabel label;
    ContributionKind kind;
    Rat p, q; // bidegree
    long dim = 0;
};

struct StateSpaceReport {
    Side side = Side::CR;
    // modified grading n = p - q; the key stores 2n so rational bidegrees
    // with half-integral charge overrides still hash exactly
    std::map<long, long> graded;
    std::vector<SectorContribution> contributions;
    long correction_dim = 0; // the C^{|G| r / d} (FJRW, Fano) or C^{|G| kappa / d} (CR, general type) summand

    long total() const;
    long dim_at(long n) const; // by modified degree n (not doubled)
};

// User-supplied broad-sector dimensions, keyed by the sector's group element;
// each entry maps residue-pairing charge -> dimension.
using BroadOverrides = std::map<GroupElement, std::map<Rat, long>>;

StateSpaceReport cr_state_space(const WeightSystem& ws, const SymmetryGroup& G,
                                const BroadOverrides* overrides = nullptr);
StateSpaceReport fjrw_state_space(const WeightSystem& ws, const SymmetryGroup& G,
                                  const BroadOverrides* overrides = nullptr);

struct CosetLedger {
    GroupElement coset;
    long dots = 0, rays = 0;
    long internal_dots = 0, empty_rays = 0, extremal_dots = 0, nonempty_rays = 0;
};

struct CorrespondenceReport {
    bool pass = false;
    StateSpaceReport cr, fjrw;
    std::vector<CosetLedger> ledger;
    std::vector<std::string> mismatches;
};

// Theorem-level check: graded dimensions of the two modified state spaces
// agree for every n, with the degree-0 balance explained by the diagram ledger.
CorrespondenceReport verify_correspondence(const WeightSystem& ws, const SymmetryGroup& G,
                                           const BroadOverrides* overrides = nullptr);

// Invariant dims of the gamma-sector using overrides, the Fermat enumeration,
// or the restricted product formula for G = <J>, in that order of preference.
std::map<Rat, long> broad_sector_dims(const WeightSystem& ws, const SymmetryGroup& G,
                                      const GroupElement& gamma,
                                      const BroadOverrides* overrides);

} // namespace lgcorr

#endif
