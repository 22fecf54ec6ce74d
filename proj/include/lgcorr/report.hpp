#ifndef LGCORR_REPORT_HPP
#define LGCORR_REPORT_HPP

#include "lgcorr/problem.hpp"

#include "json.hpp"

namespace lgcorr {

inline constexpr const char* kReportSchemaVersion = "1";

// SHA-256 of the input bytes, hex-encoded; embedded in every report so runs
// are reproducible byte-for-byte given the same input and options.
std::string sha256_hex(const std::string& data);

// Report envelope: schema version, input hash, option set.
nlohmann::json report_envelope(const ProblemFile& pf, const std::string& subcommand);

nlohmann::json rat_json(const Rat& x);
nlohmann::json group_element_json(const GroupElement& g);
nlohmann::json state_space_json(const StateSpaceReport& rep);

} // namespace lgcorr

#endif
