#pragma once

#include <json.hpp>

#include "remoteness/catalog.hpp"
#include "remoteness/latin.hpp"
#include "remoteness/metric.hpp"
#include "remoteness/pair_codes.hpp"
#include "remoteness/rgraph.hpp"

namespace rem {

inline nlohmann::json to_json(const CodeSummary& s) {
  return {{"remoteness", s.remoteness}, {"witness", s.witness_name},
          {"radius", s.radius},         {"diameter", s.diameter},
          {"covering_radius", s.covering_radius}, {"mu_count", s.mu_count}};
}

inline nlohmann::json to_json(const PairAnalysis& a) {
  return {{"d", a.distance},
          {"partitionable", a.partitionable},
          {"remoteness", a.remoteness},
          {"minimal_permutation", a.minimal_permutation.str()}};
}

inline nlohmann::json to_json(const MinCodeResult& r) {
  nlohmann::json j;
  switch (r.outcome) {
    case MinCodeOutcome::found:
      j["outcome"] = "found";
      j["m"] = r.size;
      break;
    case MinCodeOutcome::unattainable:
      j["outcome"] = "unattainable";
      break;
    case MinCodeOutcome::budget_exceeded:
      j["outcome"] = "exceeds search budget";
      break;
  }
  j["candidates_considered"] = r.candidates_considered;
  if (!r.witness.empty()) j["witness_indices"] = r.witness;
  return j;
}

inline nlohmann::json to_json(const TableRow& row) {
  nlohmann::json j{{"degree", row.entry.degree},     {"index", row.entry.index},
                   {"order", row.entry.order},       {"note", row.entry.note},
                   {"expected", row.entry.expected_remoteness},
                   {"computed", row.computed},       {"method", row.method},
                   {"ok", row.ok}};
  if (row.witness) j["witness"] = row.witness->str();
  return j;
}

inline nlohmann::json to_json(const TableReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) rows.push_back(to_json(row));
  return {{"rows", rows},
          {"all_ok", report.all_ok},
          {"degree6_groups", report.degree6_groups},
          {"degree6_none_at_n_minus_1", report.degree6_none_at_n_minus_1}};
}

inline nlohmann::json to_json(const LatinSquare& L) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < L.order(); ++r) rows.push_back(L.row(r).str());
  return {{"order", L.order()}, {"rows", rows}};
}

inline nlohmann::json to_json(const StabilityResult& s, int n) {
  nlohmann::json set = nlohmann::json::array();
  for (const auto& [a, b] : s.witness_set)
    set.push_back(std::to_string(a) + "," + std::to_string(b));
  nlohmann::json j{{"alpha", s.alpha}, {"independent_set", set}, {"alpha_is_degree", s.alpha == n}};
  if (s.witness_perm) j["witness"] = s.witness_perm->str();
  return j;
}

}  // namespace rem
