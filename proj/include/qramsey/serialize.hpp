#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qramsey/exact.hpp"
#include "qramsey/finders.hpp"
#include "qramsey/graph.hpp"

namespace qramsey {

inline constexpr const char* kWitnessSchema = "qramsey.witness/1";
inline constexpr const char* kCertificateSchema = "qramsey.certificate/1";
inline constexpr const char* kExactSchema = "qramsey.exact/1";

// Witness as stored on disk: the graph travels with the set so that a
// record can be re-checked on its own.
struct WitnessRecord {
  std::string graph6;
  finders::HomogeneityWitness witness;
  std::string mode;
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json to_json(const WitnessRecord& record);
// Throws MalformedGraph6 / DomainError on missing or ill-typed fields.
WitnessRecord witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const exact::LowerBoundCertificate& cert);
nlohmann::json to_json(const exact::ExactResult& result);

}  // namespace qramsey
