#include "lgcorr/nilpotent_poly.hpp"

#include <sstream>

namespace lgcorr {

Rat parse_rat(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

std::string rat_str(const Rat& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

void NilpotentPoly::trim()
{
    if (static_cast<int>(coeff_.size()) > trunc_) coeff_.resize(trunc_);
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

void NilpotentPoly::require_same_trunc(const NilpotentPoly& a, const NilpotentPoly& b)
{
    if (a.trunc_ != b.trunc_)
        throw std::invalid_argument("NilpotentPoly: mismatched truncation orders ("
                                    + std::to_string(a.trunc_) + " vs "
                                    + std::to_string(b.trunc_) + ")");
}

void NilpotentPoly::set_coeff(int i, const Rat& c)
{
    if (i < 0 || i >= trunc_) throw std::out_of_range("NilpotentPoly::set_coeff");
    if (i >= static_cast<int>(coeff_.size())) coeff_.resize(i + 1, Rat(0));
    coeff_[i] = c;
    trim();
}

NilpotentPoly NilpotentPoly::operator-() const
{
    NilpotentPoly r(trunc_);
    r.coeff_.reserve(coeff_.size());
    for (const auto& c : coeff_) r.coeff_.push_back(-c);
    return r;
}

NilpotentPoly& NilpotentPoly::operator+=(const NilpotentPoly& o)
{
    require_same_trunc(*this, o);
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rat(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    trim();
    return *this;
}

NilpotentPoly& NilpotentPoly::operator-=(const NilpotentPoly& o)
{
    require_same_trunc(*this, o);
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rat(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
}

NilpotentPoly operator*(const NilpotentPoly& a, const NilpotentPoly& b)
{
    NilpotentPoly::require_same_trunc(a, b);
    NilpotentPoly r(a.trunc_);
    if (a.is_zero() || b.is_zero()) return r;
    size_t n = std::min<size_t>(a.coeff_.size() + b.coeff_.size() - 1, a.trunc_);
    r.coeff_.assign(n, Rat(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < b.coeff_.size() && i + j < n; ++j)
            r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    r.trim();
    return r;
}

NilpotentPoly& NilpotentPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        coeff_.clear();
        return *this;
    }
    for (auto& x : coeff_) x *= c;
    return *this;
}

NilpotentPoly NilpotentPoly::inverse() const
{
    if (coeff_.empty() || coeff_[0] == 0)
        throw std::domain_error("NilpotentPoly::inverse: constant term is zero (non-unit)");
    NilpotentPoly r(trunc_);
    r.coeff_.assign(trunc_, Rat(0));
    r.coeff_[0] = Rat(1) / coeff_[0];
    for (int k = 1; k < trunc_; ++k) {
        Rat s(0);
        for (int j = 1; j <= k && j < static_cast<int>(coeff_.size()); ++j)
            s += coeff_[j] * r.coeff_[k - j];
        r.coeff_[k] = -s / coeff_[0];
    }
    r.trim();
    return r;
}

NilpotentPoly NilpotentPoly::retrunc(int trunc) const
{
    NilpotentPoly r(trunc);
    r.coeff_ = coeff_;
    r.trim();
    return r;
}

std::string NilpotentPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff_[i];
        if (i == 1) os << "*P";
        else if (i > 1) os << "*P^" << i;
    }
    return os.str();
}

} // namespace lgcorr
