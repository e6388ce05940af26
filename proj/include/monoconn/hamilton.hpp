#pragma once

#include <vector>

#include "monoconn/errors.hpp"

namespace monoconn {

// r edge-disjoint Hamilton paths partitioning E(K_{2r}).
struct HamiltonPathDecomposition {
  int order = 0;                       // 2r
  std::vector<std::vector<int>> paths;  // each visits all vertices once

  // Index of the path containing edge {u, v}, or -1.
  int path_of_edge(int u, int v) const {
    for (std::size_t t = 0; t < paths.size(); ++t)
      for (std::size_t s = 0; s + 1 < paths[t].size(); ++s) {
        const int a = paths[t][s];
        const int b = paths[t][s + 1];
        if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(t);
      }
    return -1;
  }

  // Index of the path having v as an end-vertex, or -1.
  int path_ending_at(int v) const {
    for (std::size_t t = 0; t < paths.size(); ++t)
      if (paths[t].front() == v || paths[t].back() == v) return static_cast<int>(t);
    return -1;
  }
};

// Zigzag decomposition: path t visits t, t+1, t-1, t+2, t-2, ... (mod 2r),
// and so ends at t and t+r.
inline HamiltonPathDecomposition decompose_hamilton_paths(int r) {
  detail::require(r >= 1, "r must be at least 1");
  const int n = 2 * r;
  HamiltonPathDecomposition d{n, {}};
  for (int t = 0; t < r; ++t) {
    std::vector<int> path;
    path.reserve(n);
    for (int s = 0; s < n; ++s) {
      const int offset = (s % 2 == 1) ? (s + 1) / 2 : -(s / 2);
      path.push_back(((t + offset) % n + n) % n);
    }
    d.paths.push_back(std::move(path));
  }
  return d;
}

}  // namespace monoconn
