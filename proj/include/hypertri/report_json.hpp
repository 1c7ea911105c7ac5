#pragma once

// JSON serialization of search results and certificates. Field order is
// fixed (ordered_json), so output is byte-stable for fixed inputs.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "hg_io.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "search.hpp"

namespace hypertri {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSearchReportSchema = "hypertri/search-report/1";

inline Json witness_json(const Witness& w) {
  return Json{{"canonical", w.canonical.to_string()}, {"hg", to_hg(w.representative)}};
}

inline std::string forbidden_name(const ForbiddenPattern& f) {
  if (std::holds_alternative<GeneralizedTriangleMode>(f)) return "generalized-triangle";
  if (const auto* x = std::get_if<ExpansionMode>(&f)) return "expansion(" + std::to_string(x->ell) + ")";
  return "explicit";
}

inline Json problem_json(const SearchProblem& p) {
  Json forbidden = Json::array();
  for (const auto& f : p.forbidden) forbidden.push_back(forbidden_name(f));
  return Json{{"r", p.r},
              {"n", p.n},
              {"codegree_must_exceed", p.threshold.to_string()},
              {"forbidden", forbidden},
              {"require_not_r_partite", p.require_not_r_partite},
              {"anchor_first_edge", p.anchor_first_edge},
              {"pruning", p.pruning},
              {"workers", p.workers},
              {"split_depth", p.split_depth},
              {"budget_nodes", p.budget.max_nodes},
              {"budget_seconds", p.budget.max_seconds}};
}

inline Json search_report_json(const SearchProblem& p, const SearchReport& rep, bool with_timing = false) {
  Json witnesses = Json::array();
  for (const auto& w : rep.witnesses) witnesses.push_back(witness_json(w));
  Json j{{"schema", kSearchReportSchema},
         {"config", problem_json(p)},
         {"status", to_string(rep.status)},
         {"nodes_explored", rep.nodes_explored},
         {"labeled_solutions", rep.labeled_solutions},
         {"witness_count", rep.witnesses.size()},
         {"witnesses", witnesses}};
  if (with_timing) j["elapsed_seconds"] = rep.elapsed.count();
  return j;
}

inline Json partition_json(const PartitionCertificate& cert) {
  Json parts = Json::array();
  for (std::size_t v = 0; v < cert.parts.size(); ++v) {
    parts.push_back(std::to_string(v) + ":" + std::to_string(cert.parts[v]));
  }
  return Json{{"parts", parts}};
}

inline Json embedding_json(const Embedding& emb) {
  Json map = Json::array();
  for (std::size_t v = 0; v < emb.map.size(); ++v) map.push_back(std::to_string(v) + ":" + std::to_string(emb.map[v]));
  return Json{{"map", map}};
}

inline Json coex_json(int r, int n, const CoexResult& res) {
  Json stages = Json::array();
  for (const auto& s : res.stages) {
    stages.push_back(Json{{"k", s.k}, {"status", to_string(s.status)}, {"nodes", s.nodes}, {"satisfiable", s.satisfiable}});
  }
  Json j{{"r", r}, {"n", n}, {"exact", res.exact()}, {"lower", res.lower}, {"upper", res.upper}};
  if (res.exact()) j["value"] = res.lower;
  if (res.witness) {
    j["witness"] = Json{{"hg", to_hg(*res.witness)}};
    if (res.witness->vertex_count() <= kMaxCanonicalVertices) {
      j["witness"]["canonical"] = canonical_form(*res.witness).to_string();
    }
  }
  j["stages"] = stages;
  return j;
}

inline Json verify_json(const VerifyReport& rep) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json j{{"n", row.n},
           {"mode", row.mode},
           {"prediction", to_string(row.prediction)},
           {"status", to_string(row.report.status)},
           {"nodes", row.report.nodes_explored},
           {"witness_count", row.report.witnesses.size()},
           {"outcome", to_string(row.outcome)}};
    if (row.mode == "expansion") j["ell"] = row.ell;
    rows.push_back(j);
  }
  return Json{{"r", rep.r}, {"rows", rows}, {"overall", rep.passed() ? "PASS" : "FAIL"}};
}

}  // namespace hypertri
