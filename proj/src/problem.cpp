#include "lgcorr/problem.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace lgcorr {

namespace {

GroupElement parse_element(const nlohmann::json& arr, int nvars)
{
    if (!arr.is_array() || static_cast<int>(arr.size()) != nvars)
        throw std::invalid_argument("problem file: group element arity mismatch");
    std::vector<Rat> ph;
    for (const auto& e : arr) ph.push_back(parse_rat(e.get<std::string>()));
    return GroupElement(std::move(ph));
}

} // namespace

ProblemFile parse_problem(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("problem file: invalid JSON: ") + e.what());
    }

    ProblemFile pf;
    pf.raw = json_text;
    pf.name = j.value("name", std::string("unnamed"));
    if (!j.contains("weights") || !j.contains("degree"))
        throw std::invalid_argument("problem file: weights and degree are required");
    std::vector<long> w = j.at("weights").get<std::vector<long>>();
    long d = j.at("degree").get<long>();
    std::optional<std::vector<std::vector<long>>> mono;
    if (j.contains("monomials"))
        mono = j.at("monomials").get<std::vector<std::vector<long>>>();
    pf.ws = WeightSystem(w, d, mono); // validates

    if (j.contains("group_generators"))
        for (const auto& g : j.at("group_generators"))
            pf.generators.push_back(parse_element(g, pf.ws.nvars()));

    if (j.contains("broad_overrides")) {
        pf.has_overrides = true;
        for (const auto& ov : j.at("broad_overrides")) {
            GroupElement g = parse_element(ov.at("element"), pf.ws.nvars());
            std::map<Rat, long> dims;
            for (const auto& [charge, dim] : ov.at("dims").items())
                dims[parse_rat(charge)] = dim.get<long>();
            pf.overrides[g] = std::move(dims);
        }
    }

    if (j.contains("options")) {
        const auto& o = j.at("options");
        pf.order = o.value("order", pf.order);
        pf.precision = o.value("precision", pf.precision);
        if (o.contains("ray_turns")) pf.ray_turns = parse_rat(o.at("ray_turns").get<std::string>());
        if (o.contains("p_trunc"))
            for (const auto& [f, m] : o.at("p_trunc").items())
                pf.p_trunc[parse_rat(f)] = m.get<int>();
        if (o.contains("exponent_convention"))
            pf.small_convention = o.at("exponent_convention").get<std::string>() != "big";
    }
    return pf;
}

ProblemFile load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

SymmetryGroup problem_group(const ProblemFile& pf, long order_cap)
{
    return close_group(pf.ws, pf.generators, order_cap);
}

} // namespace lgcorr
