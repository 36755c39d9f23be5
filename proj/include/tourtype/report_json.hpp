#pragma once

// JSON forms of the library's reports. Every document carries "schema": 1.

#include <optional>

#include "json.hpp"

#include "tourtype/census.hpp"
#include "tourtype/digraph.hpp"
#include "tourtype/tournament.hpp"
#include "tourtype/verify.hpp"

namespace tourtype {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json to_json(const CensusReport& r, const Tournament& t) {
  nlohmann::json paths = nlohmann::json::object();
  for (const auto& [alpha, f] : r.path_counts) paths[to_string(alpha)] = f;
  nlohmann::json cycles = nlohmann::json::object();
  for (const auto& [beta, g] : r.cycle_counts) cycles[to_string(beta)] = g;
  return {{"schema", kSchemaVersion}, {"n", r.order}, {"tournament", serialize(t)}, {"paths", paths}, {"cycles", cycles}};
}

inline nlohmann::json to_json(const Scope& s) {
  nlohmann::json j = {{"mode", s.mode == ScopeMode::Exhaustive ? "exhaustive" : "random"}, {"order", s.order}};
  if (s.mode == ScopeMode::Random) {
    j["samples"] = s.samples;
    j["seed"] = s.seed;
  } else {
    j["allow_large"] = s.allow_large;
  }
  return j;
}

inline nlohmann::json to_json(const Violation& v) {
  nlohmann::json j = {{"detail", v.detail}, {"types", v.types}, {"counts", v.counts}};
  if (!v.tournament.empty()) j["tournament"] = v.tournament;
  if (v.sample) j["sample"] = *v.sample;
  return j;
}

inline nlohmann::json to_json(const VerifyReport& r, bool with_timing = false) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  nlohmann::json j = {{"schema", kSchemaVersion},
                      {"property", r.property},
                      {"scope", to_json(r.scope)},
                      {"tournaments", r.tournaments},
                      {"checked", r.checked},
                      {"pass", r.pass},
                      {"violation_count", r.violation_count},
                      {"violations", violations}};
  if (r.trivial) j["trivial"] = *r.trivial;
  for (const auto& [key, value] : r.summary) j[key] = value;
  if (with_timing) j["ms"] = r.ms;
  return j;
}

inline nlohmann::json to_json(const Digraph2Spec& h, const Tournament& t, Count count,
                              std::optional<Count> complement_count) {
  nlohmann::json j = {{"schema", kSchemaVersion}, {"tournament", serialize(t)}, {"digraph", to_string(h)},
                      {"count", count}};
  if (complement_count) {
    j["complement_count"] = *complement_count;
    j["equal"] = count == *complement_count;
  }
  return j;
}

inline nlohmann::json to_json(const StarCounterexample& s) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [u, v] : s.star_arcs) arcs.push_back({u, v});
  return {{"schema", kSchemaVersion},
          {"tournament", serialize(s.tournament)},
          {"star_vertices", s.star_vertices},
          {"star_arcs", arcs},
          {"count", s.count},
          {"complement_count", s.complement_count},
          {"equal", s.count == s.complement_count}};
}

}  // namespace tourtype
