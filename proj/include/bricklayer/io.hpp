#pragma once

#include "bricklayer/dynamics.hpp"
#include "bricklayer/graphs.hpp"
#include "bricklayer/polynomial.hpp"
#include "bricklayer/search.hpp"
#include "bricklayer/spectra.hpp"
#include "bricklayer/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace bricklayer {

using Json = nlohmann::json;

/// {"d":.., "a":.., "labels":[..], "edges":[[i,j]..]} with index pairs i < j
/// in lexicographic order. Byte-stable across runs.
inline Json to_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.adj.size(); ++i)
    for (std::uint32_t j : g.adj[i])
      if (j > i) edges.push_back({i, j});
  return Json{{"d", g.d}, {"a", g.a}, {"labels", g.labels}, {"edges", std::move(edges)}};
}

inline LabeledGraph graph_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const int a = j.at("a").get<int>();
  std::vector<std::uint64_t> labels = j.at("labels").get<std::vector<std::uint64_t>>();
  LabeledGraph g = induced_subgraph(d, a, std::move(labels));
  if (j.contains("edges")) {
    Json expect = Json::array();
    for (std::size_t i = 0; i < g.adj.size(); ++i)
      for (std::uint32_t jj : g.adj[i])
        if (jj > i) expect.push_back({i, jj});
    if (expect != j.at("edges"))
      throw std::domain_error("graph edges are not the induced single-digit-difference pairs");
  }
  return g;
}

inline Json to_json(const SpectralResult& r, bool include_eigenvector = false) {
  Json j{{"lambda", r.lambda},
         {"residual", r.residual},
         {"method", to_string(r.method)},
         {"iterations", r.iterations}};
  if (include_eigenvector) j["eigenvector"] = r.eigenvector;
  return j;
}

/// {"coeffs":[["num","den"],...]}, index = power, decimal-string big integers.
inline Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs())
    coeffs.push_back({big_numerator(c).str(), big_denominator(c).str()});
  return Json{{"coeffs", std::move(coeffs)}};
}

inline Polynomial poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    const BigInt num(pair.at(0).get<std::string>());
    const BigInt den(pair.at(1).get<std::string>());
    coeffs.emplace_back(num, den);
  }
  return Polynomial{std::move(coeffs)};
}

inline Json to_json(const BivariatePoly& f) {
  Json lam = Json::array();
  for (int jj = 0; jj <= f.degree_lambda(); ++jj) lam.push_back(to_json(f.coeff(jj)));
  return Json{{"lambda_coeffs", std::move(lam)}};
}

inline Json to_json(const BoundReport& r) {
  Json j{{r.index_name, r.index},
         {"lambda", r.lambda},
         {"bound", r.bound},
         {"margin", r.margin},
         {"verdict", to_string(r.verdict)}};
  if (r.escalated) j["escalated"] = true;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline Json to_json(const ReportSummary& s) {
  return Json{{"checked", s.checked},
              {"holds_strict", s.holds_strict},
              {"holds_equal", s.holds_equal},
              {"violated", s.violated}};
}

inline Json to_json(const ChainLink& l) {
  return Json{{"name", l.name},
              {"holds", l.holds},
              {"exact", l.exact},
              {"margin", l.margin},
              {"escalated", l.escalated}};
}

inline Json to_json(const ChainReport& r) {
  Json links = Json::array();
  for (const auto& l : r.links) links.push_back(to_json(l));
  return Json{{"d", r.d},
              {"lambda", r.lambda},
              {"links", std::move(links)},
              {"conclusion_holds", r.conclusion_holds},
              {"asserted_by_paper", r.asserted_by_paper}};
}

inline Json to_json(const StaircaseReport& r) {
  return Json{{"k", r.k},
              {"condition_holds", r.condition_holds},
              {"doubled_holds", r.doubled_holds},
              {"expansion_holds", r.expansion_holds},
              {"condition_next_holds", r.condition_next_holds},
              {"min_margin", r.min_margin},
              {"failures", r.failures}};
}

inline Json to_json(const StaircaseInductionReport& r) {
  Json minus = Json::array(), plus = Json::array();
  for (const auto& c : r.minus_edges) minus.push_back(to_json(c));
  for (const auto& c : r.plus_edges) plus.push_back(to_json(c));
  return Json{{"base_theorem_holds", r.base_theorem_holds},
              {"base_condition_holds", r.base_condition_holds},
              {"minus_edges", std::move(minus)},
              {"plus_edges", std::move(plus)},
              {"certified_up_to", r.certified_up_to},
              {"failures", r.failures}};
}

inline Json to_json(const SearchRecord& r) {
  Json j{{"d", r.d},
         {"n", r.n},
         {"witness", r.witness},
         {"is_bricklayer", r.is_bricklayer},
         {"explored", r.explored}};
  j["best_lambda"] = r.best_lambda ? Json(*r.best_lambda) : Json(nullptr);
  return j;
}

inline Json to_json(const StarVsBricklayerRow& r) {
  return Json{{"d", r.d},
              {"ball_lambda", r.ball_lambda},
              {"log2_bound", r.log2_bound},
              {"ball_wins", r.ball_wins}};
}

inline Json to_json(const CrossoverRow& r) {
  return Json{{"n", r.n},
              {"star_lambda", r.star_lambda},
              {"log2_n", r.log2_n},
              {"star_wins", r.star_wins}};
}

inline Json to_json(const ProbeRow& r) {
  return Json{{"d", r.d}, {"minus_holds", r.minus_holds}, {"plus_holds", r.plus_holds}};
}

inline void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& traj) {
  out << "generation,measured_robustness,growth_factor,log_scale\n";
  for (const auto& p : traj) {
    Json row = {p.robustness, p.growth, p.log_scale};  // shortest round-trip doubles
    out << p.generation << ',' << row[0].dump() << ',' << row[1].dump() << ',' << row[2].dump()
        << '\n';
  }
}

}  // namespace bricklayer
