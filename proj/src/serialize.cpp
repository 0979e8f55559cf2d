#include "qramsey/serialize.hpp"

#include "qramsey/errors.hpp"
#include "qramsey/graph6.hpp"

namespace qramsey {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) {
  return json(std::vector<Vertex>(s.begin(), s.end()));
}

Side parse_side(const std::string& name) {
  if (name == "graph") return Side::graph;
  if (name == "complement") return Side::complement;
  throw DomainError("unknown side '" + name + "'");
}

}  // namespace

json to_json(const WitnessRecord& record) {
  const auto& w = record.witness;
  json j = {{"schema", kWitnessSchema},
            {"graph6", record.graph6},
            {"set", set_to_json(w.set)},
            {"side", to_string(w.side)},
            {"min_degree", w.min_degree},
            {"threshold", w.threshold},
            {"mode", record.mode},
            {"params", record.params}};
  j["seed"] = w.seed ? json(*w.seed) : json(nullptr);
  return j;
}

WitnessRecord witness_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kWitnessSchema) {
      throw DomainError("unsupported witness schema '" + j.at("schema").get<std::string>() + "'");
    }
    WitnessRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.witness.set = VertexSet(j.at("set").get<std::vector<Vertex>>());
    r.witness.side = parse_side(j.at("side").get<std::string>());
    r.witness.min_degree = j.at("min_degree").get<std::size_t>();
    r.witness.threshold = j.at("threshold").get<double>();
    r.mode = j.at("mode").get<std::string>();
    r.params = j.value("params", json::object());
    if (j.contains("seed") && !j.at("seed").is_null()) r.witness.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed witness record: ") + e.what());
  }
}

json to_json(const exact::LowerBoundCertificate& cert) {
  json j = {{"schema", kCertificateSchema},
            {"graph6", cert.graph6},
            {"order", cert.order},
            {"claim", exact::to_string(cert.claim)},
            {"k", cert.k},
            {"subsets_checked", cert.subsets_checked},
            {"elapsed_seconds", cert.elapsed_seconds},
            {"verified", cert.verified},
            {"asymptotic", cert.asymptotic}};
  if (cert.claim == exact::ClaimType::fixed) {
    j["t"] = cert.t;
  } else {
    j["threshold"] = cert.threshold_id;
  }
  if (cert.violating_set) {
    j["violating_set"] = set_to_json(*cert.violating_set);
    j["violating_side"] = to_string(*cert.violating_side);
  }
  return j;
}

json to_json(const exact::ExactResult& result) {
  json orders = json::array();
  for (const auto& o : result.orders) {
    orders.push_back({{"order", o.order},
                      {"graphs", o.graphs},
                      {"checked", o.checked},
                      {"subsets", o.subsets},
                      {"all_contain", o.all_contain}});
  }
  json j = {{"schema", kExactSchema},
            {"claim", exact::to_string(result.claim)},
            {"k", result.k},
            {"value", result.value},
            {"witness_graph6", encode_graph6(result.witness_graph)},
            {"witness_order", result.witness_graph.order()},
            {"orders", orders},
            {"subsets_examined", result.subsets_examined}};
  if (result.claim == exact::ClaimType::fixed) {
    j["t"] = result.t;
  } else {
    j["threshold"] = result.threshold_id;
  }
  return j;
}

}  // namespace qramsey
