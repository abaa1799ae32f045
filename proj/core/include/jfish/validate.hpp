#pragma once

#include <string>

#include "jfish/certificates.hpp"

namespace jfish {

// Plain structural checks, deliberately sharing no code with the searches
// that produce certificates. Each returns false and fills "why" (if given)
// on the first violated condition. Spanning variants additionally require
// the structure to cover every vertex of g.
bool validate_cycle(const Graph& g, const CycleCert& c, std::string* why = nullptr);
bool validate_jellyfish(const Graph& g, const JellyfishCert& jf, bool spanning,
                        std::string* why = nullptr);
bool validate_broom(const Graph& g, const BroomCert& br, bool spanning,
                    std::string* why = nullptr);
bool validate_spider(const Graph& g, const SpiderCert& sp, bool spanning,
                     std::string* why = nullptr);
bool validate_octopus(const Graph& g, const OctopusCert& oc, bool spanning,
                      std::string* why = nullptr);

// Distinct vertices joined consecutively by edges of g.
bool validate_path(const Graph& g, const std::vector<int>& path, std::string* why = nullptr);

} // namespace jfish
