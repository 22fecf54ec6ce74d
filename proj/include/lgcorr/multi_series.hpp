#ifndef LGCORR_MULTI_SERIES_HPP
#define LGCORR_MULTI_SERIES_HPP

#include "lgcorr/nilpotent_poly.hpp"

#include <map>
#include <vector>

namespace lgcorr {

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const NilpotentPoly& c) { return c.is_zero(); }
} // namespace detail

// Truncated multivariate series in named t-variables t_0..t_{n-1} and a
// distinguished Laurent variable z.  t-exponents are >= 0 and capped by a
// total-degree bound; z-exponents may be negative.
template <class C>
class MultiSeriesT {
public:
    using Key = std::vector<int>; // t-exponents then z-exponent, size nvars+1

    MultiSeriesT() : nvars_(0), bound_(0) {}
    MultiSeriesT(int nvars, int bound) : nvars_(nvars), bound_(bound)
    {
        if (nvars < 0 || bound < 0) throw std::invalid_argument("MultiSeries: bad shape");
    }

    int nvars() const { return nvars_; }
    int bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, C>& terms() const { return terms_; }

    static int tdeg(const Key& k)
    {
        int s = 0;
        for (size_t i = 0; i + 1 < k.size(); ++i) s += k[i];
        return s;
    }

    // Monomial constructor helpers
    static MultiSeriesT constant(const C& c, int nvars, int bound)
    {
        MultiSeriesT s(nvars, bound);
        Key k(nvars + 1, 0);
        s.add_term(k, c);
        return s;
    }
    static MultiSeriesT monomial(const C& c, Key key, int bound)
    {
        MultiSeriesT s(static_cast<int>(key.size()) - 1, bound);
        s.add_term(key, c);
        return s;
    }

    void add_term(const Key& key, const C& c)
    {
        if (static_cast<int>(key.size()) != nvars_ + 1)
            throw std::invalid_argument("MultiSeries: key arity mismatch");
        for (int i = 0; i < nvars_; ++i)
            if (key[i] < 0) throw std::invalid_argument("MultiSeries: negative t-exponent");
        if (tdeg(key) > bound_) return; // outside the truncation window
        if (detail::coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Key& key) const
    {
        auto it = terms_.find(key);
        if (it == terms_.end()) return C{};
        return it->second;
    }

    MultiSeriesT operator-() const
    {
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    MultiSeriesT& operator+=(const MultiSeriesT& o)
    {
        require_compatible(o);
        if (o.bound_ < bound_) *this = truncate(o.bound_);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend MultiSeriesT operator+(MultiSeriesT a, const MultiSeriesT& b) { return a += b; }
    friend MultiSeriesT operator-(MultiSeriesT a, const MultiSeriesT& b) { return a += -b; }

    friend MultiSeriesT operator*(const MultiSeriesT& a, const MultiSeriesT& b)
    {
        a.require_compatible(b);
        MultiSeriesT r(a.nvars_, std::min(a.bound_, b.bound_));
        for (const auto& [k1, c1] : a.terms_) {
            int d1 = tdeg(k1);
            for (const auto& [k2, c2] : b.terms_) {
                if (d1 + tdeg(k2) > r.bound_) continue;
                Key k(a.nvars_ + 1);
                for (int i = 0; i <= a.nvars_; ++i) k[i] = k1[i] + k2[i];
                r.add_term(k, c1 * c2);
            }
        }
        return r;
    }
    MultiSeriesT& operator*=(const MultiSeriesT& o) { return *this = *this * o; }
    MultiSeriesT& operator*=(const Rat& c)
    {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, x] : terms_) x *= c;
        return *this;
    }
    friend MultiSeriesT operator*(MultiSeriesT a, const Rat& c) { return a *= c; }
    friend MultiSeriesT operator*(const Rat& c, MultiSeriesT a) { return a *= c; }

    bool operator==(const MultiSeriesT& o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    MultiSeriesT truncate(int new_bound) const
    {
        MultiSeriesT r(nvars_, new_bound);
        for (const auto& [k, c] : terms_)
            if (tdeg(k) <= new_bound) r.terms_.emplace(k, c);
        return r;
    }

    // d/dt_i
    MultiSeriesT derivative(int var) const
    {
        if (var < 0 || var >= nvars_) throw std::out_of_range("MultiSeries::derivative");
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [k, c] : terms_) {
            if (k[var] == 0) continue;
            Key nk = k;
            nk[var] -= 1;
            r.add_term(nk, c * Rat(k[var]));
        }
        return r;
    }

    MultiSeriesT shift_z(int k) const // multiply by z^k
    {
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [key, c] : terms_) {
            Key nk = key;
            nk[nvars_] += k;
            r.terms_.emplace(nk, c);
        }
        return r;
    }

    MultiSeriesT flip_z() const // substitute z -> -z
    {
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [key, c] : terms_) {
            if (key[nvars_] % 2 == 0) r.terms_.emplace(key, c);
            else r.terms_.emplace(key, -c);
        }
        return r;
    }

    int min_zpow() const
    {
        bool any = false;
        int m = 0;
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (!any || k[nvars_] < m) m = k[nvars_];
            any = true;
        }
        return m;
    }
    int max_zpow() const
    {
        bool any = false;
        int m = 0;
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (!any || k[nvars_] > m) m = k[nvars_];
            any = true;
        }
        return m;
    }

    // All terms with the given z-exponent, as a z-free series.
    MultiSeriesT z_slice(int zpow) const
    {
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [k, c] : terms_) {
            if (k[nvars_] != zpow) continue;
            Key nk = k;
            nk[nvars_] = 0;
            r.terms_.emplace(nk, c);
        }
        return r;
    }

    // Substitute t_i -> sub[i] (z-free series in the same variable set).
    // The z variable passes through unchanged.
    MultiSeriesT compose(const std::vector<MultiSeriesT>& sub) const
    {
        if (static_cast<int>(sub.size()) != nvars_)
            throw std::invalid_argument("MultiSeries::compose: arity mismatch");
        MultiSeriesT r(nvars_, bound_);
        for (const auto& [k, c] : terms_) {
            MultiSeriesT m = constant(c, nvars_, bound_);
            for (int i = 0; i < nvars_ && !m.is_zero(); ++i)
                for (int e = 0; e < k[i] && !m.is_zero(); ++e) m = m * sub[i];
            r += m.shift_z(k[nvars_]);
        }
        return r;
    }

private:
    void require_compatible(const MultiSeriesT& o) const
    {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MultiSeries: incompatible variable sets");
    }

    std::map<Key, C> terms_;
    int nvars_;
    int bound_;
};

using MultiSeries = MultiSeriesT<Rat>;

std::string multiseries_str(const MultiSeries& s, const std::vector<std::string>& names);

} // namespace lgcorr

#endif
