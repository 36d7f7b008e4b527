#pragma once

// Canonical JSON for every result type: object keys sorted, integers only,
// rationals as {"num", "den"} in lowest terms with positive denominator.

#include <string>

#include "json.hpp"

#include "extcorr/autoeq.hpp"
#include "extcorr/dims.hpp"
#include "extcorr/farey.hpp"
#include "extcorr/stability.hpp"

namespace extcorr {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaId = "extcorr-report/1";

using Json = nlohmann::json;

Json to_json(const RankDegree& x);
Json to_json(const Slope& s);
Json to_json(const Normalized& n);
Json to_json(const FareySplit& split);
Json to_json(const DecompositionTree& tree);
Json to_json(const SubbundleNumerics& s);
Json to_json(const StabilityCertificate& cert);
Json to_json(const CorrespondenceProfile& p);
Json to_json(const GroupDescription& g);
Json to_json(const AutoeqDescription& a);

/// Provenance tags for the fields of each result kind.
Json provenance_for(const FareySplit&);
Json provenance_for(const DecompositionTree&);
Json provenance_for(const Normalized&);
Json provenance_for(const StabilityCertificate& cert);
Json provenance_for(const CorrespondenceProfile&);
Json provenance_for(const AutoeqDescription& a);

struct Report {
  std::string command;
  Json inputs;
  Json result;
  Json provenance;

  Json to_json() const;
};

/// Compact dump; std::map-backed objects already iterate in key order.
std::string canonical_dump(const Json& j);

}  // namespace extcorr
