#include "lgcorr/multi_series.hpp"

#include "lgcorr/laurent_z.hpp"

#include <sstream>

namespace lgcorr {

std::string LaurentZ::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (p == 1) os << "*z";
        else if (p != 0) os << "*z^" << p;
    }
    return os.str();
}

std::string multiseries_str(const MultiSeries& s, const std::vector<std::string>& names)
{
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int i = 0; i < s.nvars(); ++i) {
            if (k[i] == 0) continue;
            os << "*" << names.at(i);
            if (k[i] > 1) os << "^" << k[i];
        }
        int zp = k[s.nvars()];
        if (zp == 1) os << "*z";
        else if (zp != 0) os << "*z^" << zp;
    }
    return os.str();
}

} // namespace lgcorr
