#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monoconn/connectivity.hpp"
#include "monoconn/oracle.hpp"

namespace monoconn {

struct ArchiveEntry {
  long long iteration = 0;
  int M = 0;
  friend bool operator==(const ArchiveEntry&, const ArchiveEntry&) = default;
};

struct SearchState {
  ColouredCompleteGraph colouring;  // best colouring found
  int M = 0;                        // its objective value
  std::uint64_t seed = 0;
  long long iterations = 0;
  std::vector<ArchiveEntry> archive;  // each strict improvement of the best, in order
  bool surrogate = false;             // true when M is not exact_M
};

struct SearchOptions {
  long long iterations = 10000;
  std::uint64_t seed = 1;
  double initial_temperature = 1.0;
  double cooling = 0.999;
  int exact_limit = 12;  // exact_M as objective up to this n
  std::optional<ColouredCompleteGraph> start;
};

// Cheap stand-in for M with s = 1 on larger n: the biggest k-core component
// of a single colour that is k-connected as it stands. Never above M.
inline int surrogate_M(const ColouredCompleteGraph& f, int k) {
  int best = 0;
  for (Colour c = 1; c <= f.colours(); ++c)
    for (const auto& comp : detail::k_core_components(f, {c}, k))
      if (static_cast<int>(comp.size()) > best && is_k_connected(f.colour_graph(c, comp), k))
        best = static_cast<int>(comp.size());
  return best;
}

// Simulated annealing over single-edge recolourings, minimising M.
inline SearchState adversarial_search(int n, int r, int k, int s, const SearchOptions& options = {}) {
  detail::require(r >= 1, "r must be at least 1");
  detail::require(k >= 1 && s >= 1, "k and s must be at least 1");
  detail::require(options.iterations >= 0, "iterations must be non-negative");
  const bool exact = n <= options.exact_limit;
  detail::require(exact || s == 1, "the surrogate objective only covers s = 1; lower n to " +
                                       std::to_string(options.exact_limit) + " for exact search");
  auto objective = [&](const ColouredCompleteGraph& f) { return exact ? exact_M(f, k, s).M : surrogate_M(f, k); };

  std::mt19937_64 rng(options.seed);
  ColouredCompleteGraph current = [&] {
    if (options.start) {
      detail::require(options.start->order() == n && options.start->colours() == r,
                      "start colouring does not match n and r");
      return *options.start;
    }
    std::uniform_int_distribution<int> pick(1, r);
    return ColouredCompleteGraph::from_function(n, r, [&](int, int) { return pick(rng); });
  }();
  int value = objective(current);
  SearchState state{current, value, options.seed, 0, {{0, value}}, !exact};
  if (r == 1) return state;

  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> shift(1, r - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double temperature = options.initial_temperature;
  for (long long it = 1; it <= options.iterations; ++it) {
    int u = vertex(rng);
    int v = vertex(rng);
    while (v == u) v = vertex(rng);
    const Colour old = current.colour(u, v);
    const Colour fresh = static_cast<Colour>((old - 1 + shift(rng)) % r + 1);
    current.set_colour(u, v, fresh);
    const int next = objective(current);
    const double roll = unit(rng);
    if (next <= value || roll < std::exp(static_cast<double>(value - next) / temperature)) {
      value = next;
      if (value < state.M) {
        state.M = value;
        state.colouring = current;
        state.archive.push_back({it, value});
      }
    } else {
      current.set_colour(u, v, old);
    }
    temperature *= options.cooling;
    state.iterations = it;
  }
  return state;
}

}  // namespace monoconn
