#ifndef FPS_JSON_IO_HPP
#define FPS_JSON_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fps/kaluza.hpp"
#include "fps/series.hpp"
#include "fps/verdict.hpp"

namespace fps {

using json = nlohmann::ordered_json;

/// Interchange format for series, bit-exact:
/// {"order": N, "coeffs": ["1", "-3/2", ...]} with every entry a canonical
/// rational string (sign on the numerator, positive denominator, reduced).
inline json series_to_json(const TruncatedPowerSeries& s) {
  json j;
  j["order"] = s.order();
  json coeffs = json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline TruncatedPowerSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw parse_error("series JSON must be an object with 'order' and 'coeffs'");
  if (!j["order"].is_number_integer() || j["order"].get<long>() < 0)
    throw parse_error("series JSON: 'order' must be a non-negative integer");
  const long order = j["order"].get<long>();
  if (!j["coeffs"].is_array())
    throw parse_error("series JSON: 'coeffs' must be an array of rational strings");
  const auto& arr = j["coeffs"];
  if (static_cast<long>(arr.size()) != order + 1)
    throw parse_error("series JSON: expected " + std::to_string(order + 1) + " coefficients, got " +
                      std::to_string(arr.size()));
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& entry : arr) {
    if (!entry.is_string()) throw parse_error("series JSON: coefficients must be strings");
    coeffs.push_back(Rational::parse(entry.get<std::string>()));
  }
  return TruncatedPowerSeries(std::move(coeffs));
}

inline TruncatedPowerSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open series file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return series_from_json(j);
}

inline json verdict_to_json(const PropertyVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness_index ? json(*v.witness_index) : json(nullptr);
  if (v.witness_values) {
    json values = json::array();
    for (const Rational& r : *v.witness_values) values.push_back(r.str());
    j["witness_values"] = std::move(values);
  } else {
    j["witness_values"] = nullptr;
  }
  return j;
}

inline json shape_to_json(const ShapeClass& s) {
  json j;
  switch (s.kind) {
    case ShapeClass::Kind::NonDecreasing: j["class"] = "non-decreasing"; break;
    case ShapeClass::Kind::NonIncreasing: j["class"] = "non-increasing"; break;
    case ShapeClass::Kind::Valley:
      j["class"] = "valley";
      j["valley_at"] = s.valley_index;
      break;
  }
  return j;
}

inline json kaluza_report_to_json(const KaluzaReport& r) {
  json j;
  j["holds"] = r.holds;
  j["first_positive_index"] =
      r.first_positive_index ? json(*r.first_positive_index) : json(nullptr);
  j["checked_order"] = r.checked_order;
  j["reciprocal"] = series_to_json(r.reciprocal_prefix);
  return j;
}

inline json predicate_to_json(const PredicateResult& r) {
  json j;
  j["value"] = r.value;
  j["reasons"] = r.reasons;
  return j;
}

}  // namespace fps

#endif
