#pragma once

#include <algorithm>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monoconn/connectivity.hpp"
#include "monoconn/errors.hpp"

namespace monoconn {

struct TraceStep {
  std::string name;
  std::string detail;
};

// Output of an extractor: a verified witness, the order the theorem promises,
// and the named proof steps that produced it.
struct ExtractionReport {
  SubgraphWitness witness;
  long long guarantee = 0;
  std::vector<TraceStep> trace;
  std::vector<std::pair<std::string, long long>> stats;

  bool has_stat(const std::string& key) const {
    return std::any_of(stats.begin(), stats.end(), [&](const auto& s) { return s.first == key; });
  }
  long long stat(const std::string& key) const {
    for (const auto& [name, value] : stats)
      if (name == key) return value;
    throw PreconditionError("report has no statistic " + key);
  }
  bool took(const std::string& step) const {
    return std::any_of(trace.begin(), trace.end(), [&](const TraceStep& t) { return t.name == step; });
  }
};

namespace detail {

inline std::string describe(std::span<const int> vs, std::size_t limit = 12) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  if (vs.size() > limit) out += ",... (" + std::to_string(vs.size()) + " total)";
  return out + "}";
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<int> set_minus(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_union(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_intersection(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> complement(int n, std::span<const int> a) {
  std::vector<bool> in(n, false);
  for (int v : a) in[v] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// Local indices in g of the given labels.
inline std::vector<int> locals(const SimpleGraph& g, std::span<const int> labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(g.index_of(l));
  return out;
}

inline std::vector<int> labels_of(const SimpleGraph& g, std::span<const int> local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

struct Recorder {
  ExtractionReport report;

  void step(std::string name, std::string detail = {}) { report.trace.push_back({std::move(name), std::move(detail)}); }
  void stat(std::string key, long long value) { report.stats.emplace_back(std::move(key), value); }
  void check(bool condition, const std::string& what) {
    if (!condition) {
      std::string msg = what + " [trace:";
      for (const auto& t : report.trace) msg += " " + t.name;
      throw InvariantError(msg + "]");
    }
  }
};

// Re-verifies the witness in f and the promised order; every extractor ends
// here.
inline ExtractionReport finish(Recorder& rec, const ColouredCompleteGraph& f, std::vector<int> vertices, Colour colour,
                               int k, long long guarantee) {
  std::sort(vertices.begin(), vertices.end());
  rec.report.witness = SubgraphWitness{std::move(vertices), {colour}, k};
  rec.report.guarantee = guarantee;
  rec.check(verify_witness(f, rec.report.witness), "witness failed re-verification");
  rec.check(rec.report.witness.order() >= guarantee,
            "witness order " + std::to_string(rec.report.witness.order()) + " below guarantee " +
                std::to_string(guarantee));
  rec.step("verified", "order " + std::to_string(rec.report.witness.order()) + " >= " + std::to_string(guarantee));
  return std::move(rec.report);
}

}  // namespace detail
}  // namespace monoconn
