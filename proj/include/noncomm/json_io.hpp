#pragma once

#include <string>

#include <json.hpp>

#include "noncomm/graph.hpp"
#include "noncomm/poly.hpp"
#include "noncomm/spectrum.hpp"
#include "noncomm/verify.hpp"

namespace noncomm {

using Json = nlohmann::ordered_json;

/// {degree, coefficients: [strings]} - strings because the coefficients of
/// exact characteristic polynomials exceed 64 bits.
inline Json poly_to_json(const IntPolynomial& p) {
  Json j;
  j["degree"] = p.degree();
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  return j;
}

inline IntPolynomial poly_from_json(const Json& j) {
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coefficients")) {
    coeffs.emplace_back(c.get<std::string>());
  }
  return IntPolynomial(std::move(coeffs));
}

inline Json root_to_json(const ExactRoot& r) {
  Json j;
  switch (r.kind) {
    case ExactRoot::Kind::integer:
      j["kind"] = "integer";
      j["value"] = r.int_value.str();
      break;
    case ExactRoot::Kind::surd:
      j["kind"] = "surd";
      j["value"] = r.to_string();
      j["a"] = r.surd_a.str();
      j["b"] = r.surd_b.str();
      j["d"] = r.surd_d.str();
      break;
    case ExactRoot::Kind::numeric:
      j["kind"] = "numeric";
      j["value"] = r.numeric_value;
      j["error_bound"] = r.error_bound;
      break;
  }
  return j;
}

inline Json spectrum_to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& [root, mult] : s.entries) {
    Json e = root_to_json(root);
    e["multiplicity"] = mult;
    arr.push_back(e);
  }
  return arr;
}

inline Json energy_to_json(const EnergyValue& e) {
  Json j;
  j["exact"] = e.exact;
  if (e.exact) {
    j["value"] = e.to_string();
    j["rational"] = e.rational.str();
    Json surds = Json::array();
    for (const auto& [d, coef] : e.surds) {
      surds.push_back({{"coefficient", coef.str()}, {"d", d.str()}});
    }
    j["surds"] = surds;
  }
  j["numeric"] = e.numeric;
  j["bound"] = e.bound;
  return j;
}

/// {vertices, edges, labels} graph export.
inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(Json::array({u, v}));
  }
  j["edges"] = edges;
  j["labels"] = g.vertex_labels();
  return j;
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = r.theorem_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = r.status_string();
  j["lhs"] = r.lhs_summary;
  j["rhs"] = r.rhs_summary;
  j["deviation"] = r.deviation;
  j["notes"] = r.notes;
  return j;
}

}  // namespace noncomm
