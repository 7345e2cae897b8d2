#pragma once

// JSON forms used by the command-line tool:
//   instance   {"p":3,"S":[[1,0],[2,0],[0,1],[0,2]],"g":[1,1]}
//   solution   {"d":[1,0,1,0],"branch":"case1-two-lines","weight":2}
//   prop33     {"p":3,"classes":[[0,0],[1,0],...]}

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "psym/error.hpp"
#include "psym/forms.hpp"
#include "psym/parser.hpp"
#include "psym/valuation.hpp"
#include "psym/zerosum.hpp"

namespace psym::json {

using nlohmann::json;

inline json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ArgumentError(std::string("JSON object lacks field \"") + key + "\"");
  return j.at(key);
}

inline std::uint32_t uint_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 0x7fffffff)
    throw ArgumentError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint32_t>();
}

inline GPair pair_value(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("group elements are [u, w] pairs");
  return {uint_value(j[0], "coordinate"), uint_value(j[1], "coordinate")};
}

inline std::vector<GPair> pairs_value(const json& j, const char* what) {
  if (!j.is_array()) throw ArgumentError(std::string(what) + " must be an array of pairs");
  std::vector<GPair> out;
  for (const auto& e : j) out.push_back(pair_value(e));
  return out;
}

}  // namespace detail

inline json to_json(GPair s) { return json::array({s.u, s.w}); }

inline json to_json(std::span<const GPair> pairs) {
  json out = json::array();
  for (GPair s : pairs) out.push_back(to_json(s));
  return out;
}

inline ZeroSumInstance instance_from_json(const json& j) {
  ZeroSumInstance inst;
  inst.p = detail::uint_value(detail::field(j, "p"), "p");
  inst.S = detail::pairs_value(detail::field(j, "S"), "S");
  inst.g = detail::pair_value(detail::field(j, "g"));
  validate_instance(inst);
  return inst;
}

inline json to_json(const ZeroSumInstance& inst) {
  return {{"p", inst.p}, {"S", to_json(std::span(inst.S))}, {"g", to_json(inst.g)}};
}

inline ZeroSumSolution solution_from_json(const json& j) {
  ZeroSumSolution sol;
  const json& d = detail::field(j, "d");
  if (!d.is_array()) throw ArgumentError("\"d\" must be an array");
  for (const auto& e : d) sol.d.push_back(detail::uint_value(e, "coefficient"));
  if (j.contains("branch")) {
    if (!j["branch"].is_string()) throw ArgumentError("\"branch\" must be a string");
    auto b = branch_from_string(j["branch"].get<std::string>());
    if (!b) throw ArgumentError("unknown branch label");
    sol.branch = *b;
  }
  return sol;
}

inline json to_json(const ZeroSumSolution& sol) {
  return {{"d", sol.d}, {"branch", to_string(sol.branch)}, {"weight", sol.weight()}};
}

inline json to_json(const ExhaustReport& r) {
  json hist = json::object();
  for (const auto& [name, n] : r.branch_histogram) hist[name] = n;
  return {{"p", r.p},
          {"mode", r.sampled ? "sampled" : "full"},
          {"instances", r.instances},
          {"failures", r.failures},
          {"branch_histogram", hist},
          {"max_weight", r.max_weight},
          {"oracle_checked", r.oracle_checked},
          {"elapsed_ms", r.elapsed_ms}};
}

struct Prop33Input {
  std::uint32_t p = 0;
  std::vector<GPair> classes;
};

inline Prop33Input prop33_input_from_json(const json& j) {
  return {detail::uint_value(detail::field(j, "p"), "p"),
          detail::pairs_value(detail::field(j, "classes"), "classes")};
}

inline json to_json(const Prop33Report& r) {
  return {{"p", r.p},
          {"classes", to_json(std::span(r.classes))},
          {"excluded", r.excluded},
          {"d", r.d.d},
          {"branch", to_string(r.solution.branch)},
          {"trace", r.trace.to_string()},
          {"n", r.n.str()},
          {"expected_leading",
           {{"c", r.expected_coefficient}, {"r", r.expected_r}, {"s", r.expected_s}}},
          {"check_passed", r.check_passed}};
}

inline json to_json(const Value& v, std::uint32_t p) {
  json out = {{"finite", v.finite}, {"p", p}, {"text", to_string(v, p)}};
  if (v.finite) {
    out["pu"] = v.pu;
    out["pw"] = v.pw;
  }
  return out;
}

inline json to_json(const Monomial& m) {
  return {{"c", m.c.value()}, {"r", m.r}, {"s", m.s}, {"i", m.i}, {"j", m.j},
          {"text", to_string(m)}};
}

inline json to_json(const PCentralVerdict& v) {
  json out = {{"p_central", v.is_p_central}};
  if (v.witness) out["witness"] = {{"d", v.witness->index.d}, {"trace", v.witness->trace.to_string()}};
  return out;
}

/// JSON array of element expression strings.
inline std::vector<AlgebraElem> elements_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array() || j.empty()) throw ArgumentError("expected a nonempty JSON list of strings");
  std::vector<AlgebraElem> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ArgumentError("list entries must be element expression strings");
    out.push_back(parse_element(e.get<std::string>(), p));
  }
  return out;
}

}  // namespace psym::json
