#ifndef LGCORR_BIG_I_HPP
#define LGCORR_BIG_I_HPP

#include "lgcorr/exponent_sum.hpp"
#include "lgcorr/multi_series.hpp"

#include <map>

namespace lgcorr {

// phi-basis-valued multivariate series: one MultiSeries per phi-component.
// var_index[i] is the phi-label carried by the variable t_0^{var_index[i]}.
struct BigIFunction {
    std::vector<long> var_index;
    std::map<long, MultiSeries> comps;
    int bound = 0;

    int nvars() const { return static_cast<int>(var_index.size()); }
    MultiSeries component(long phi) const;
    BigIFunction& add(long phi, const MultiSeries::Key& key, const Rat& c);
    bool operator==(const BigIFunction& o) const
    {
        return var_index == o.var_index && comps == o.comps;
    }
};

// Big FJRW I-function on the narrow variables, total t-degree <= order.
// Multi-indices whose phi-label falls outside Nar are annihilated.
BigIFunction fjrw_big_i(const WeightSystem& ws, int order);

// Untwisted J-function on all d variables t_0^0..t_0^{d-1}.
BigIFunction untwisted_j(const WeightSystem& ws, int order);

// Reconstruct the big I-function from the small one (Gamma-sandwich plus
// translation/annihilation bookkeeping); a consistency route, not the
// primary constructor.
BigIFunction big_from_small(const WeightSystem& ws, const ExponentSum& small, int order);

} // namespace lgcorr

#endif
