#pragma once

// Structured-text (JSON) and CSV forms of bound reports, survey rows and
// isoclinism witnesses. Field names are stable; documents carry
// `schemaVersion`.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/bounds.hpp"
#include "cayley/catalog.hpp"
#include "cayley/isoclinism.hpp"

namespace cayley {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

inline Json to_json(const Ingredient& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

inline Ingredient ingredient_from_json(const nlohmann::json& j) {
  if (j.is_array()) return j.get<std::vector<std::uint64_t>>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<std::uint64_t>();
  return j.get<double>();
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["theoremId"] = to_string(r.theorem);
  j["lhs"] = r.lhs;
  j["rhsLog2"] = r.rhs_log2 ? Json(*r.rhs_log2) : Json(nullptr);
  j["rhsExact"] = r.rhs_exact ? Json(*r.rhs_exact) : Json(nullptr);
  j["rhsExceedsU64"] = r.rhs_exceeds_u64;
  j["holds"] = r.holds;
  j["tight"] = r.tight();
  auto hyps = Json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(Json{{"name", h.name}, {"satisfied", h.satisfied}, {"witness", h.witness}});
  j["hypotheses"] = std::move(hyps);
  Json ing = Json::object();
  for (const auto& [k, v] : r.ingredients) ing[k] = to_json(v);
  j["ingredients"] = std::move(ing);
  return j;
}

inline BoundReport bound_report_from_json(const nlohmann::json& j) {
  try {
    BoundReport r;
    auto id = theorem_from_string(j.at("theoremId").get<std::string>());
    if (!id) throw InputError("unknown theoremId");
    r.theorem = *id;
    r.lhs = j.at("lhs").get<std::uint64_t>();
    if (!j.at("rhsLog2").is_null()) r.rhs_log2 = j["rhsLog2"].get<double>();
    if (!j.at("rhsExact").is_null()) r.rhs_exact = j["rhsExact"].get<std::uint64_t>();
    r.rhs_exceeds_u64 = j.value("rhsExceedsU64", false);
    r.holds = j.at("holds").get<bool>();
    for (const auto& h : j.at("hypotheses"))
      r.hypotheses.push_back(
          {h.at("name").get<std::string>(), h.at("satisfied").get<bool>(), h.at("witness").get<std::string>()});
    for (const auto& [k, v] : j.at("ingredients").items()) r.ingredients[k] = ingredient_from_json(v);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

/// A parsed report is consistent when its verdict follows from its numbers
/// and every recorded hypothesis is satisfied.
inline bool report_consistent(const BoundReport& r, double tolerance = kDefaultTolerance) {
  if (decide(r, tolerance) != r.holds) return false;
  return std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                     [](const Hypothesis& h) { return h.satisfied; });
}

inline Json verify_document(const std::string& descriptor, const GroupTable& g,
                            const std::vector<BoundReport>& reports) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["descriptor"] = descriptor;
  j["order"] = g.order();
  auto arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["reports"] = std::move(arr);
  return j;
}

inline Json to_json(const SurveyRow& row) {
  Json j;
  j["descriptor"] = row.descriptor;
  j["order"] = row.order;
  j["center"] = row.center;
  j["secondCenter"] = row.second_center;
  j["centralQuotient"] = row.central_quotient;
  j["gamma2"] = row.gamma2;
  j["commutators"] = row.commutators;
  j["breadth"] = row.breadth;
  j["nilpotencyClass"] = row.nilpotency_class ? Json(*row.nilpotency_class) : Json(nullptr);
  Json holds = Json::object(), ratios = Json::object();
  for (const auto& r : row.reports) {
    holds[std::string(to_string(r.theorem))] = r.holds;
    if (r.rhs_exact)
      ratios[std::string(to_string(r.theorem))] =
          static_cast<double>(r.lhs) / static_cast<double>(*r.rhs_exact);
  }
  j["holds"] = std::move(holds);
  j["tightness"] = std::move(ratios);
  return j;
}

inline Json survey_document(const std::vector<SurveyRow>& rows) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  auto arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  j["rows"] = std::move(arr);
  return j;
}

// CSV: fixed columns, then one holds column per theorem, then one ratio
// column per theorem (empty where the bound has no exact integer form).
inline std::string survey_csv_header() {
  std::string h = "descriptor,order,center,second_center,central_quotient,gamma2,commutators,breadth,class";
  for (TheoremId id : kAllTheorems) h += "," + std::string(to_string(id)) + "_holds";
  for (TheoremId id : kAllTheorems) h += "," + std::string(to_string(id)) + "_ratio";
  return h;
}

inline std::string survey_csv_row(const SurveyRow& row) {
  auto quote = [](const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  };
  std::string out = quote(row.descriptor);
  for (std::uint64_t v : {row.order, row.center, row.second_center, row.central_quotient, row.gamma2,
                          row.commutators, row.breadth})
    out += "," + std::to_string(v);
  out += "," + (row.nilpotency_class ? std::to_string(*row.nilpotency_class) : std::string("-"));
  for (TheoremId id : kAllTheorems) out += std::string(",") + (row.report(id).holds ? "1" : "0");
  for (TheoremId id : kAllTheorems) {
    const auto& r = row.report(id);
    out += ",";
    if (r.rhs_exact) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f",
                    static_cast<double>(r.lhs) / static_cast<double>(*r.rhs_exact));
      out += buf;
    }
  }
  return out;
}

/// Witness with explicit coset representatives and derived-subgroup
/// members so a third party can rebuild and re-check it.
inline Json to_json(const IsoclinismWitness& w, const std::string& g_desc, const std::string& h_desc) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["g"] = g_desc;
  j["h"] = h_desc;
  j["gCentralReps"] = w.g_central.coset_reps;
  j["hCentralReps"] = w.h_central.coset_reps;
  j["gDerived"] = w.g_derived.to_parent;
  j["hDerived"] = w.h_derived.to_parent;
  j["phi"] = w.phi.map;
  j["theta"] = w.theta.map;
  j["verified"] = w.verified;
  return j;
}

/// Rebuilds a witness for the given groups from its serialized maps and
/// re-verifies it. The stored representatives and members must match the
/// deterministic ones computed from the groups.
inline IsoclinismWitness witness_from_json(const nlohmann::json& j, const GroupTable& g,
                                           const GroupTable& h) {
  auto w = identity_witness(g);
  auto wh = identity_witness(h);
  IsoclinismWitness r{g, h, w.g_central, wh.g_central, w.g_derived, wh.g_derived,
                      {w.g_central.table, wh.g_central.table, {}},
                      {w.g_derived.table, wh.g_derived.table, {}}, false};
  try {
    if (j.at("gCentralReps").get<std::vector<Element>>() != r.g_central.coset_reps ||
        j.at("hCentralReps").get<std::vector<Element>>() != r.h_central.coset_reps ||
        j.at("gDerived").get<std::vector<Element>>() != r.g_derived.to_parent ||
        j.at("hDerived").get<std::vector<Element>>() != r.h_derived.to_parent)
      return r;
    r.phi.map = j.at("phi").get<std::vector<Element>>();
    r.theta.map = j.at("theta").get<std::vector<Element>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed witness: ") + e.what());
  }
  if (r.phi.map.size() != r.phi.domain.order() || r.theta.map.size() != r.theta.domain.order())
    return r;
  r.verified = verify_isoclinism(r);
  return r;
}

}  // namespace cayley
