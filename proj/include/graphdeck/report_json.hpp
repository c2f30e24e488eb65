#pragma once

#include <string>

#include "json.hpp"

#include "graphdeck/extremal.hpp"
#include "graphdeck/families.hpp"
#include "graphdeck/recognizers.hpp"

namespace graphdeck {

using ordered_json = nlohmann::ordered_json;

inline ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["property"] = property_name(v.property);
  switch (v.decision) {
    case RecDecision::Holds: j["decision"] = "holds"; break;
    case RecDecision::Fails: j["decision"] = "fails"; break;
    case RecDecision::Ambiguous: j["decision"] = "ambiguous"; break;
    case RecDecision::Value:
      j["decision"] = "value";
      if (v.value)
        j["value"] = *v.value;
      else
        j["value"] = "infinity";
      break;
  }
  j["method"] = v.method == RecMethod::DirectRule ? "direct-rule"
                                                  : "preimage-oracle";
  j["n"] = v.n;
  j["subdeck_size"] = v.subdeck_size;
  j["witness_count"] = v.witness_count;
  ordered_json ws = ordered_json::array();
  for (const CanonicalForm& w : v.witnesses) ws.push_back(w.to_graph6());
  j["witnesses"] = std::move(ws);
  return j;
}

inline ordered_json extremal_record_to_json(const ExtremalRecord& rec) {
  ordered_json j;
  j["n"] = rec.n;
  j["classes"] = {rec.class_a, rec.class_b};
  j["max"] = rec.max_common;
  ordered_json ws = ordered_json::array();
  for (const auto& [a, b] : rec.witnesses)
    ws.push_back({a.to_graph6(), b.to_graph6()});
  j["witnesses"] = std::move(ws);
  j["witness_total"] = rec.witness_total;
  j["pairs_examined"] = rec.pairs_examined;
  j["pairs_total"] = rec.pairs_total;
  j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

inline ordered_json bound_row_to_json(const BoundReportRow& row) {
  ordered_json j;
  j["bound"] = row.bound_name;
  j["n"] = row.record.n;
  j["classes"] = {row.record.class_a, row.record.class_b};
  j["bound_value"] = row.bound_value;
  j["max"] = row.record.max_common;
  j["tight"] = row.tight;
  j["pass"] = row.pass;
  j["kind"] = row.asserted ? "theorem" : "conjecture-check";
  ordered_json ws = ordered_json::array();
  for (const auto& [a, b] : row.record.witnesses)
    ws.push_back({a.to_graph6(), b.to_graph6()});
  j["witnesses"] = std::move(ws);
  j["pairs_examined"] = row.record.pairs_examined;
  j["elapsed_ms"] = row.record.elapsed_ms;
  return j;
}

inline ordered_json family_to_json(const FamilyInstance& inst,
                                   std::optional<int> measured = std::nullopt) {
  ordered_json j;
  j["family"] = inst.family_id;
  j["k"] = inst.k;
  j["n"] = inst.n;
  j["expected_common"] = inst.expected_common;
  if (measured) j["measured_common"] = *measured;
  return j;
}

}  // namespace graphdeck
