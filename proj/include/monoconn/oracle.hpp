#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "monoconn/connectivity.hpp"
#include "monoconn/errors.hpp"
#include "monoconn/graph.hpp"

namespace monoconn {

// Default exhaustive-enumeration limit on n; MONOCONN_ORACLE_MAX_N overrides.
inline int default_oracle_limit() {
  if (const char* env = std::getenv("MONOCONN_ORACLE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 64) return static_cast<int>(v);
  }
  return 16;
}

struct OracleOptions {
  int max_n = default_oracle_limit();
  // For n > max_n: enumerate, per colour set, subsets of single components
  // of the k-core instead of all of V. Each component must fit max_n.
  bool colour_restricted = false;
};

struct OracleResult {
  int M = 0;
  std::optional<SubgraphWitness> witness;  // absent iff M == 0
};

namespace detail {

using Mask = std::uint64_t;

// Graph on at most 64 vertices as neighbourhood bitmasks.
struct MaskGraph {
  std::vector<Mask> adj;

  bool connected(Mask vertices) const {
    if (vertices == 0) return true;
    Mask seen = vertices & (~vertices + 1);
    Mask frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj[v] & vertices & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen == vertices;
  }

  // Brute force over every candidate separator of size <= k-1.
  bool k_connected(Mask vertices, int k) const {
    const int size = std::popcount(vertices);
    if (size < k + 1) return false;
    for (Mask rest = vertices; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adj[v] & vertices) < k) return false;
    }
    std::vector<int> members;
    for (Mask rest = vertices; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
    return separators_fail(vertices, members, 0, k - 1, 0);
  }

 private:
  // True iff no set of at most `budget` further members (index >= start)
  // disconnects `vertices` minus `removed`.
  bool separators_fail(Mask vertices, const std::vector<int>& members, std::size_t start, int budget, Mask removed) const {
    if (!connected(vertices & ~removed)) return false;
    if (budget == 0) return true;
    for (std::size_t i = start; i < members.size(); ++i)
      if (!separators_fail(vertices, members, i + 1, budget - 1, removed | (Mask{1} << members[i]))) return false;
    return true;
  }
};

inline MaskGraph mask_graph(const ColouredCompleteGraph& f, const std::vector<int>& vertices,
                            const std::vector<Colour>& palette) {
  std::vector<bool> allowed(f.colours() + 1, false);
  for (Colour c : palette) allowed[c] = true;
  MaskGraph g;
  g.adj.assign(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (allowed[f.colour(vertices[i], vertices[j])]) {
        g.adj[i] |= Mask{1} << j;
        g.adj[j] |= Mask{1} << i;
      }
  return g;
}

// All colour sets of size min(s, r), in lexicographic order. Larger sets
// never hurt, so smaller ones need not be enumerated.
inline std::vector<std::vector<Colour>> palettes(int r, int s) {
  const int size = std::min(s, r);
  std::vector<std::vector<Colour>> out;
  std::vector<Colour> current;
  auto rec = [&](auto&& self, Colour next) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (Colour c = next; c <= r; ++c) {
      current.push_back(c);
      self(self, c + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Next mask with the same popcount (Gosper).
inline Mask next_combination(Mask x) {
  const Mask lowest = x & (~x + 1);
  const Mask ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

struct Hit {
  Mask mask = 0;
  std::size_t palette = 0;
};

// Scans sizes from `vertices.size()` down to min_size; at each size every
// subset is tried against every palette, stopping at the first hit.
inline std::optional<Hit> largest_k_connected(const std::vector<MaskGraph>& graphs, int count, int k, int min_size) {
  for (int size = count; size >= std::max(min_size, k + 1); --size) {
    const Mask last = size == 64 ? ~Mask{0} : ((Mask{1} << size) - 1) << (count - size);
    for (Mask subset = size == 64 ? ~Mask{0} : (Mask{1} << size) - 1;; subset = next_combination(subset)) {
      for (std::size_t p = 0; p < graphs.size(); ++p)
        if (graphs[p].k_connected(subset, k)) return Hit{subset, p};
      if (subset == last) break;
    }
  }
  return std::nullopt;
}

// Vertices of the k-core of the palette graph on `vertices`, split into
// connected components.
inline std::vector<std::vector<int>> k_core_components(const ColouredCompleteGraph& f, const std::vector<Colour>& palette,
                                                       int k) {
  SimpleGraph g = f.colour_graph(palette, f.all_vertices());
  std::vector<bool> removed(g.order(), false);
  std::vector<int> degree(g.order());
  for (int v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (removed[v] || degree[v] >= k) continue;
      removed[v] = true;
      changed = true;
      for (int w : g.neighbours(v)) --degree[w];
    }
  }
  auto comps = components(g, removed);
  for (auto& c : comps)
    for (int& v : c) v = g.label(v);
  return comps;
}

}  // namespace detail

// M(f, n, r, s, k): the largest order of a k-connected subgraph using at most
// s colours, by exhaustive enumeration. M = 0 when there is none.
inline OracleResult exact_M(const ColouredCompleteGraph& f, int k, int s, const OracleOptions& options = {}) {
  detail::require(k >= 1, "k must be at least 1");
  detail::require(s >= 1, "s must be at least 1");
  const int n = f.order();
  const auto palettes = detail::palettes(f.colours(), s);

  if (n <= options.max_n) {
    const auto vertices = f.all_vertices();
    std::vector<detail::MaskGraph> graphs;
    for (const auto& p : palettes) graphs.push_back(detail::mask_graph(f, vertices, p));
    auto hit = detail::largest_k_connected(graphs, n, k, k + 1);
    if (!hit) return {};
    SubgraphWitness w{{}, palettes[hit->palette], k};
    for (int v = 0; v < n; ++v)
      if ((hit->mask >> v) & 1U) w.vertices.push_back(v);
    return {w.order(), w};
  }

  if (!options.colour_restricted)
    throw ResourceError("exact oracle limited to n <= " + std::to_string(options.max_n) + " (got n = " +
                        std::to_string(n) + "); raise MONOCONN_ORACLE_MAX_N or use colour-restricted mode");

  OracleResult best;
  for (const auto& palette : palettes) {
    for (const auto& comp : detail::k_core_components(f, palette, k)) {
      if (static_cast<int>(comp.size()) <= best.M) continue;
      if (static_cast<int>(comp.size()) > options.max_n)
        throw ResourceError("k-core component of order " + std::to_string(comp.size()) + " exceeds the oracle limit " +
                            std::to_string(options.max_n));
      std::vector<detail::MaskGraph> graphs{detail::mask_graph(f, comp, palette)};
      auto hit = detail::largest_k_connected(graphs, static_cast<int>(comp.size()), k, best.M + 1);
      if (!hit) continue;
      SubgraphWitness w{{}, palette, k};
      for (std::size_t i = 0; i < comp.size(); ++i)
        if ((hit->mask >> i) & 1U) w.vertices.push_back(comp[i]);
      best = {w.order(), w};
    }
  }
  return best;
}

}  // namespace monoconn
