#ifndef LGCORR_PROBLEM_HPP
#define LGCORR_PROBLEM_HPP

#include "lgcorr/state_space.hpp"

#include <optional>
#include <string>

namespace lgcorr {

// Parsed problem file: weight data, symmetry generators, optional broad
// overrides and the option block.  Fractions are given as strings "a/b".
struct ProblemFile {
    std::string name;
    WeightSystem ws;
    std::vector<GroupElement> generators;
    BroadOverrides overrides;
    bool has_overrides = false;

    long order = 12;
    unsigned precision = 200;
    std::optional<Rat> ray_turns;
    std::map<Rat, int> p_trunc;
    bool small_convention = true; // --exponent-convention small|big

    std::string raw; // original bytes, hashed into every report
};

ProblemFile load_problem(const std::string& path);
ProblemFile parse_problem(const std::string& json_text);

SymmetryGroup problem_group(const ProblemFile& pf, long order_cap = 100000);

} // namespace lgcorr

#endif
