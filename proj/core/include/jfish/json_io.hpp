#pragma once

#include <string>

#include "jfish/certificates.hpp"
#include "jfish/degree.hpp"
#include "jfish/experiments.hpp"
#include "jfish/hopping.hpp"

namespace jfish {

// JSON renderings with fixed field order, so two serializations of the same
// value are byte-identical (reports differ only in wall_ms across runs).
// The JSON library stays an implementation detail behind these strings.
std::string to_json(const CycleCert& c);
std::string to_json(const JellyfishCert& c);
std::string to_json(const BroomCert& c);
std::string to_json(const SpiderCert& c);
std::string to_json(const OctopusCert& c);
std::string to_json(const HoppingState& st);
std::string to_json(const HoppingReport& rep);
std::string to_json(const VerifyReport& rep);

// Degree and condition summary of a graph, the payload behind "check".
std::string summary_json(const Graph& g, const DegreeProfile& prof, const ConditionCheck& cond);

} // namespace jfish
