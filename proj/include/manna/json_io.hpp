#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "manna/allocation.hpp"
#include "manna/instance.hpp"
#include "manna/mdrr.hpp"
#include "manna/minimax.hpp"
#include "manna/oracle.hpp"
#include "manna/properties.hpp"

// JSON formats. Instances and allocations index items 0-based; everything in
// reports (witnesses, traces, classification) is 1-based. Rationals are bare
// integers when integral, "p/q" strings in lowest terms otherwise.

namespace manna {

using json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

inline json rational_to_json(const Rational& r) {
  if (r.is_integral()) return json(r.numerator());
  return json(r.str());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JsonFormatError(e.what());
    }
  }
  throw JsonFormatError("utility entries must be integers or \"p/q\" strings");
}

// {"agents": n, "items": m, "utilities": [[row per agent]]}
inline json instance_to_json(const Instance& inst) {
  json rows = json::array();
  for (int a = 0; a < inst.agents(); ++a) {
    json row = json::array();
    for (int o = 0; o < inst.items(); ++o) row.push_back(rational_to_json(inst.utility(a, o)));
    rows.push_back(std::move(row));
  }
  return json{{"agents", inst.agents()}, {"items", inst.items()}, {"utilities", std::move(rows)}};
}

inline Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("agents") || !j.contains("items") || !j.contains("utilities")) {
    throw JsonFormatError("instance JSON needs \"agents\", \"items\" and \"utilities\"");
  }
  if (!j["agents"].is_number_integer() || !j["items"].is_number_integer() ||
      !j["utilities"].is_array()) {
    throw JsonFormatError("instance JSON has wrong field types");
  }
  int agents = j["agents"].get<int>();
  int items = j["items"].get<int>();
  std::vector<std::vector<Rational>> u;
  for (const auto& row : j["utilities"]) {
    if (!row.is_array()) throw JsonFormatError("utilities must be an array of arrays");
    std::vector<Rational> values;
    for (const auto& cell : row) values.push_back(rational_from_json(cell));
    u.push_back(std::move(values));
  }
  try {
    return Instance(agents, items, std::move(u));
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

// {"bundles": [[item indices]]}
inline json allocation_to_json(const Allocation& alloc) {
  return json{{"bundles", alloc.bundles}};
}

inline Allocation allocation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bundles") || !j["bundles"].is_array()) {
    throw JsonFormatError("allocation JSON needs a \"bundles\" array");
  }
  std::vector<std::vector<int>> bundles;
  for (const auto& bundle : j["bundles"]) {
    if (!bundle.is_array()) throw JsonFormatError("each bundle must be an array of item indices");
    std::vector<int> items;
    for (const auto& cell : bundle) {
      if (!cell.is_number_integer()) throw JsonFormatError("item indices must be integers");
      items.push_back(cell.get<int>());
    }
    bundles.push_back(std::move(items));
  }
  return make_allocation(std::move(bundles));
}

inline const char* part_name(Part part) {
  switch (part) {
    case Part::All: return "all";
    case Part::Plus: return "plus";
    case Part::Minus: return "minus";
  }
  return "";
}

inline json witness_to_json(const Witness& witness) {
  if (const auto* envy = std::get_if<EnvyWitness>(&witness)) {
    json j{{"envious", envy->envious + 1}, {"envied", envy->envied + 1}};
    if (envy->part) j["part"] = part_name(*envy->part);
    if (envy->item) j["item"] = *envy->item + 1;
    if (envy->side) j["bundle"] = (*envy->side == BundleSide::Own ? "own" : "envied");
    return j;
  }
  if (const auto* welfare = std::get_if<WelfareWitness>(&witness)) {
    return json{{"item", welfare->item + 1},
                {"agent", welfare->holder + 1},
                {"better_agent", welfare->better_agent + 1}};
  }
  const auto& dom = std::get<DominanceWitness>(witness);
  return json{{"dominating", allocation_to_json(dom.dominating)}};
}

inline Witness witness_from_json(const json& j) {
  if (j.contains("dominating")) {
    return DominanceWitness{allocation_from_json(j["dominating"])};
  }
  if (j.contains("better_agent")) {
    return WelfareWitness{j.at("item").get<int>() - 1, j.at("agent").get<int>() - 1,
                          j.at("better_agent").get<int>() - 1};
  }
  EnvyWitness envy;
  envy.envious = j.at("envious").get<int>() - 1;
  envy.envied = j.at("envied").get<int>() - 1;
  if (j.contains("part")) {
    std::string part = j["part"].get<std::string>();
    envy.part = part == "all" ? Part::All : part == "plus" ? Part::Plus : Part::Minus;
  }
  if (j.contains("item")) envy.item = j["item"].get<int>() - 1;
  if (j.contains("bundle")) {
    envy.side = j["bundle"].get<std::string>() == "own" ? BundleSide::Own : BundleSide::Envied;
  }
  return envy;
}

// {"property": str, "holds": bool, "witness": {...}|null}
inline json report_to_json(const PropertyReport& report) {
  json j{{"property", report.property}, {"holds", report.holds}};
  j["witness"] = report.witness ? witness_to_json(*report.witness) : json(nullptr);
  return j;
}

inline PropertyReport report_from_json(const json& j) {
  PropertyReport report;
  report.property = j.at("property").get<std::string>();
  report.holds = j.at("holds").get<bool>();
  if (j.contains("witness") && !j["witness"].is_null()) {
    report.witness = witness_from_json(j["witness"]);
  }
  return report;
}

inline json mdrr_trace_to_json(const std::vector<MdrrPick>& trace) {
  json out = json::array();
  for (const MdrrPick& pick : trace) {
    json j{{"phase", pick.phase}, {"round", pick.round}, {"agent", pick.agent + 1}};
    if (pick.item) {
      j["item"] = *pick.item + 1;
    } else {
      j["item"] = "fake";
    }
    out.push_back(std::move(j));
  }
  return out;
}

inline json minimax_log_to_json(const std::vector<MinimaxStep>& log) {
  json out = json::array();
  for (const MinimaxStep& step : log) {
    json candidates = json::array();
    for (int a : step.candidates) candidates.push_back(a + 1);
    json utilities = json::array();
    for (const Rational& u : step.utilities) utilities.push_back(rational_to_json(u));
    out.push_back(json{{"item", step.item + 1},
                       {"candidates", std::move(candidates)},
                       {"chosen", step.chosen + 1},
                       {"utilities", std::move(utilities)}});
  }
  return out;
}

inline json search_result_to_json(const SearchResult& result) {
  switch (result.mode) {
    case SearchMode::Count:
      return json{{"count", result.count}, {"space", result.space}};
    case SearchMode::Exists: {
      json j{{"mode", "exists"}, {"space", result.space}};
      j["found"] = result.found ? allocation_to_json(*result.found) : json(nullptr);
      return j;
    }
    case SearchMode::AllWitnesses: {
      json allocations = json::array();
      for (const Allocation& alloc : result.matches) allocations.push_back(allocation_to_json(alloc));
      return json{{"mode", "all"},
                  {"count", result.count},
                  {"space", result.space},
                  {"allocations", std::move(allocations)}};
    }
  }
  return json();
}

inline const char* item_class_label(const ItemClass& cls) {
  switch (cls.tag) {
    case ItemTag::Mixed: return "mixed";
    case ItemTag::Good: return cls.pure ? "pure good" : "non-pure good";
    case ItemTag::Bad: return cls.pure ? "pure bad" : "non-pure bad";
    case ItemTag::Dummy: return "dummy";
  }
  return "";
}

inline json domain_profile_to_json(const DomainProfile& profile) {
  json j{{"is_identical", profile.is_identical},
         {"is_absolute_identical", profile.is_absolute_identical},
         {"is_ternary", profile.is_ternary},
         {"is_ternary_symmetric", profile.is_ternary_symmetric}};
  j["alpha"] = profile.alpha ? rational_to_json(*profile.alpha) : json(nullptr);
  j["beta"] = profile.beta ? rational_to_json(*profile.beta) : json(nullptr);
  return j;
}

}  // namespace manna
