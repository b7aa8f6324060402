/**
 * @brief JSON formats.
 *
 *   capacity:  {"n": 2, "values": [{"subset": [], "value": 0}, {"subset": [0], "value": 0.5}, ...]}
 *              all 2^n subsets required, each exactly once
 *   function:  {"values": [0.2, 0.8]}   (a bare array is accepted too)
 *   subspace:  {"n": 3, "generators": [[...], ...], "m": [...]}
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "capacity.hpp"
#include "extension.hpp"
#include "report.hpp"

namespace tnint::io {

inline json parse(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

/// Reads a file, or parses the argument itself when it starts like inline JSON.
inline json load(const std::string& path_or_json, std::string_view what) {
  const auto first = path_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_json[first] == '{' || path_or_json[first] == '[')) {
    return parse(path_or_json, what);
  }
  std::ifstream in(path_or_json);
  if (!in) throw InputError(std::string(what) + ": cannot open '" + path_or_json + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), what);
}

namespace detail {
inline double number(const json& j, std::string_view what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}
inline std::size_t count(const json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}
}  // namespace detail

inline FnVec fnvec_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("values") ? j["values"] : j;
  if (!arr.is_array()) throw InputError("function: expected {\"values\": [...]} or an array");
  std::vector<double> v;
  for (const auto& x : arr) v.push_back(detail::number(x, "function value"));
  return FnVec(std::move(v));
}

inline json fnvec_to_json(const FnVec& f) {
  json arr = json::array();
  for (double v : f) arr.push_back(v);
  return json{{"values", arr}};
}

inline Capacity capacity_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) {
    throw InputError("capacity: expected {\"n\": ..., \"values\": [...]}");
  }
  const std::size_t n = detail::count(j["n"], "capacity n");
  if (n < 1 || n > kMaxPoints) throw InputError("capacity n out of range");
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> values(total, 0.0);
  std::vector<bool> seen(total, false);
  if (!j["values"].is_array()) throw InputError("capacity values must be an array");
  for (const auto& entry : j["values"]) {
    if (!entry.is_object() || !entry.contains("subset") || !entry.contains("value")) {
      throw InputError("capacity entry must be {\"subset\": [...], \"value\": ...}");
    }
    Subset s;
    for (const auto& idx : entry["subset"]) {
      const std::size_t i = detail::count(idx, "subset index");
      if (i >= n) throw InputError("subset index " + std::to_string(i) + " out of range");
      s = s.with(i);
    }
    if (seen[s.bits()]) throw InputError("capacity lists a subset twice");
    seen[s.bits()] = true;
    values[s.bits()] = detail::number(entry["value"], "capacity value");
  }
  for (std::size_t b = 0; b < total; ++b) {
    if (!seen[b]) {
      json missing = Subset(static_cast<std::uint32_t>(b)).points();
      throw InputError("capacity: missing value for subset " + missing.dump());
    }
  }
  return Capacity(n, std::move(values));
}

inline json capacity_to_json(const Capacity& nu) {
  json values = json::array();
  for (std::uint32_t b = 0; b < nu.subset_count(); ++b) {
    values.push_back(json{{"subset", Subset(b).points()}, {"value", nu.values()[b]}});
  }
  return json{{"n", nu.n()}, {"values", values}};
}

inline GenSubspace subspace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) {
    throw InputError("subspace: expected {\"n\": ..., \"generators\": [...], \"m\": [...]}");
  }
  const std::size_t n = detail::count(j["n"], "subspace n");
  std::vector<FnVec> gens;
  std::vector<double> m;
  if (j.contains("generators")) {
    for (const auto& g : j["generators"]) gens.push_back(fnvec_from_json(g));
  }
  if (j.contains("m")) {
    for (const auto& v : j["m"]) m.push_back(detail::number(v, "assigned value"));
  }
  return GenSubspace(n, std::move(gens), std::move(m));
}

inline json subspace_to_json(const GenSubspace& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(to_json(g));
  return json{{"n", s.n()}, {"generators", gens}, {"m", s.assigned()}};
}

}  // namespace tnint::io
