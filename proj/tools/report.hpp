#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "monoconn/bounds.hpp"
#include "monoconn/extract_report.hpp"
#include "monoconn/oracle.hpp"
#include "monoconn/search.hpp"

namespace monoconn::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const SubgraphWitness& w) {
  return Json{{"vertices", w.vertices}, {"colours", w.colours}, {"k", w.k}, {"order", w.order()}};
}

inline Json to_json(const ExtractionReport& rep) {
  Json trace = Json::array();
  for (const auto& t : rep.trace) trace.push_back(Json{{"step", t.name}, {"detail", t.detail}});
  Json stats = Json::object();
  for (const auto& [key, value] : rep.stats) stats[key] = value;
  return Json{{"witness", to_json(rep.witness)}, {"guarantee", rep.guarantee}, {"trace", trace}, {"stats", stats}};
}

inline Json to_json(const BoundEntry& e) { return Json{{"value", e.value}, {"source", e.source}}; }

inline Json to_json(const BoundsRow& row) {
  Json j{{"n", row.n}, {"r", row.r}, {"s", row.s}, {"k", row.k}, {"lower", to_json(row.lower)},
         {"upper", to_json(row.upper)}};
  j["conjectured"] = row.conjectured ? to_json(*row.conjectured) : Json(nullptr);
  Json lows = Json::array(), ups = Json::array();
  for (const auto& e : row.lower_candidates) lows.push_back(to_json(e));
  for (const auto& e : row.upper_candidates) ups.push_back(to_json(e));
  j["lower_candidates"] = lows;
  j["upper_candidates"] = ups;
  j["notes"] = row.notes;
  return j;
}

inline Json to_json(const SearchState& st) {
  Json archive = Json::array();
  for (const auto& a : st.archive) archive.push_back(Json{{"iteration", a.iteration}, {"M", a.M}});
  return Json{{"M", st.M},           {"objective", st.surrogate ? "surrogate" : "exact"},
              {"seed", st.seed},     {"iterations", st.iterations},
              {"archive", archive}};
}

namespace detail {

inline std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

inline void flatten(const std::string& prefix, const Json& v, std::string& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(prefix.empty() ? key : prefix + "." + key, child, out);
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    out += prefix;
    for (const auto& x : v) out += " " + scalar(x);
    out += "\n";
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "." + std::to_string(i), v[i], out);
  } else {
    out += prefix + " " + scalar(v) + "\n";
  }
}

}  // namespace detail

// One "key value" line per leaf, keys dotted by nesting, in insertion order.
inline std::string to_text(const Json& report) {
  std::string out;
  detail::flatten("", report, out);
  return out;
}

}  // namespace monoconn::cli
