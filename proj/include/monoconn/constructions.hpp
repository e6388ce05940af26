#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoconn/affine_plane.hpp"
#include "monoconn/arith.hpp"
#include "monoconn/errors.hpp"
#include "monoconn/graph.hpp"
#include "monoconn/hamilton.hpp"

namespace monoconn {

struct Block {
  std::string name;
  std::vector<int> vertices;
};

// An extremal colouring together with the largest order any monochromatic
// k-connected subgraph of it can have.
struct ConstructionReport {
  std::string kind;
  std::vector<std::pair<std::string, long long>> parameters;
  std::optional<ColouredCompleteGraph> colouring;
  std::optional<ColouredBipartiteGraph> bipartite;
  long long claimed_bound = 0;
  std::vector<Block> blocks;

  long long parameter(const std::string& key) const {
    for (const auto& [name, value] : parameters)
      if (name == key) return value;
    throw PreconditionError("construction has no parameter " + key);
  }
};

namespace detail {

// Splits `count` consecutive vertices starting at `first` into `parts`
// blocks whose sizes differ by at most one, larger blocks first.
inline std::vector<std::vector<int>> balanced_blocks(int first, int count, int parts) {
  std::vector<std::vector<int>> blocks(parts);
  const int base = count / parts;
  const int extra = count % parts;
  int v = first;
  for (int i = 0; i < parts; ++i) {
    const int size = base + (i < extra ? 1 : 0);
    for (int s = 0; s < size; ++s) blocks[i].push_back(v++);
  }
  return blocks;
}

inline std::vector<int> block_index(int n, const std::vector<Block>& blocks) {
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b].vertices) owner[v] = static_cast<int>(b);
  return owner;
}

}  // namespace detail

// Two-colouring with blocks A_1..A_4 of size k-1 and B of size n-4k+4
// (red = 1, blue = 2). For n >= 4k-3 no monochromatic k-connected subgraph
// has more than n-2k+2 vertices; for n = 4k-4 there is none at all.
inline ConstructionReport construct_bg(int n, int k) {
  detail::require(k >= 1, "k must be at least 1");
  detail::require(n >= 4 * k - 4, "construct bg needs n >= 4k-4");
  detail::require(n >= 2, "n must be at least 2");
  constexpr Colour red = 1;
  constexpr Colour blue = 2;
  const bool variant = n == 4 * k - 4;

  ConstructionReport rep;
  rep.kind = "bg";
  rep.parameters = {{"n", n}, {"r", 2}, {"k", k}};
  int v = 0;
  for (int i = 1; i <= 4; ++i) {
    Block b{"A" + std::to_string(i), {}};
    for (int s = 0; s < k - 1; ++s) b.vertices.push_back(v++);
    rep.blocks.push_back(std::move(b));
  }
  Block rest{"B", {}};
  while (v < n) rest.vertices.push_back(v++);
  rep.blocks.push_back(std::move(rest));

  // Block ids 0..3 are A_1..A_4 and 4 is B.
  const auto owner = detail::block_index(n, rep.blocks);
  auto colour = [&](int x, int y) -> Colour {
    int i = owner[x];
    int j = owner[y];
    if (i == j) {
      if (variant) return i <= 1 ? blue : red;
      return (i <= 1 || i == 4) ? red : blue;
    }
    if (i > j) std::swap(i, j);
    if (j == 4) return i <= 1 ? red : blue;
    const bool red_pair = (i == 0 && j == 1) || (i == 0 && j == 2) || (i == 1 && j == 3);
    return red_pair ? red : blue;
  };
  rep.colouring = ColouredCompleteGraph::from_function(n, 2, colour);
  rep.claimed_bound = variant ? 0 : n - 2 * k + 2;
  return rep;
}

// The closed-form upper bound carried by construct_affine.
inline long long affine_claimed_bound(long long n, long long r, long long k) {
  const long long q = r - 1;
  const long long w = n - r * (k - 1);
  long long bound = q * detail::ceil_div(w, q * q) + k - 1;
  if (r == 3) {
    const long long refined = (w % 4 == 1) ? (n - k + 2) / 2 : detail::floor_div(n - k + 3, 2);
    bound = std::min(bound, refined);
  }
  return bound;
}

// Affine-plane colouring: blocks C_1..C_r of size k-1 and the rest W split
// into (r-1)^2 near-equal classes V_i indexed by the points of AG(2, r-1).
inline ConstructionReport construct_affine(int n, int r, int k) {
  detail::require(k >= 1, "k must be at least 1");
  detail::require(r >= 2, "r must be at least 2");
  if (!is_prime_power(r - 1)) throw UnsupportedOrderError("r-1 not a prime power (r-1 = " + std::to_string(r - 1) + ")");
  detail::require(n >= r * (k - 1), "construct affine needs n >= r(k-1)");
  detail::require(n >= 2, "n must be at least 2");
  const AffinePlane plane(r - 1);
  const int points = plane.point_count();

  ConstructionReport rep;
  rep.kind = "affine";
  rep.parameters = {{"n", n}, {"r", r}, {"k", k}};
  int v = 0;
  for (int i = 1; i <= r; ++i) {
    Block b{"C" + std::to_string(i), {}};
    for (int s = 0; s < k - 1; ++s) b.vertices.push_back(v++);
    rep.blocks.push_back(std::move(b));
  }
  auto classes = detail::balanced_blocks(v, n - v, points);
  for (int i = 0; i < points; ++i) rep.blocks.push_back({"V" + std::to_string(i + 1), std::move(classes[i])});

  // Block ids 0..r-1 are C_1..C_r; r + p is V_{p+1}, attached to point p.
  const auto owner = detail::block_index(n, rep.blocks);
  auto colour = [&](int x, int y) -> Colour {
    const int i = owner[x];
    const int j = owner[y];
    const bool ci = i < r;
    const bool cj = j < r;
    if (ci && cj) return std::min(i, j) + 1;
    if (ci) return i + 1;
    if (cj) return j + 1;
    if (i == j) return 1;
    return plane.joining_class(i - r, j - r) + 1;
  };
  rep.colouring = ColouredCompleteGraph::from_function(n, r, colour);
  rep.claimed_bound = affine_claimed_bound(n, r, k);
  return rep;
}

// Colouring with no monochromatic k-connected subgraph: 2r blocks D_i of
// size <= k-1; D_i-D_j edges take the colour of the Hamilton path of K_{2r}
// through ij, and edges inside D_i the colour of the path ending at i.
inline ConstructionReport construct_hamzero(int n, int r, int k) {
  detail::require(k >= 2, "construct hamzero needs k >= 2");
  // One colour leaves K_n itself, which is (n-1)-connected.
  detail::require(r >= 2, "construct hamzero needs r >= 2");
  detail::require(n <= 2 * r * (k - 1), "construct hamzero needs n <= 2r(k-1)");
  detail::require(n >= 2, "n must be at least 2");
  const auto paths = decompose_hamilton_paths(r);

  ConstructionReport rep;
  rep.kind = "hamzero";
  rep.parameters = {{"n", n}, {"r", r}, {"k", k}};
  auto blocks = detail::balanced_blocks(0, n, 2 * r);
  for (int i = 0; i < 2 * r; ++i) rep.blocks.push_back({"D" + std::to_string(i + 1), std::move(blocks[i])});

  std::vector<std::vector<int>> pair_colour(2 * r, std::vector<int>(2 * r, 0));
  for (int t = 0; t < r; ++t) {
    const auto& path = paths.paths[t];
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      pair_colour[path[s]][path[s + 1]] = t + 1;
      pair_colour[path[s + 1]][path[s]] = t + 1;
    }
    pair_colour[path.front()][path.front()] = t + 1;
    pair_colour[path.back()][path.back()] = t + 1;
  }
  const auto owner = detail::block_index(n, rep.blocks);
  rep.colouring = ColouredCompleteGraph::from_function(n, r, [&](int x, int y) { return pair_colour[owner[x]][owner[y]]; });
  rep.claimed_bound = 0;
  return rep;
}

// K_{m,n} with parts M_1..M_r and N_1..N_r of equal size; M_i-N_j edges get
// colour ((i - j) mod r) + 1. Every monochromatic component has (m+n)/r
// vertices.
inline ConstructionReport construct_bipartite_modular(int m, int n, int r) {
  detail::require(r >= 1, "r must be at least 1");
  detail::require(m >= r && n >= r && m % r == 0 && n % r == 0, "construct bipmod needs r to divide m and n");
  ConstructionReport rep;
  rep.kind = "bipmod";
  rep.parameters = {{"m", m}, {"n", n}, {"r", r}};
  const int sm = m / r;
  const int sn = n / r;
  for (int i = 0; i < r; ++i) {
    Block b{"M" + std::to_string(i + 1), {}};
    for (int s = 0; s < sm; ++s) b.vertices.push_back(i * sm + s);
    rep.blocks.push_back(std::move(b));
  }
  for (int j = 0; j < r; ++j) {
    Block b{"N" + std::to_string(j + 1), {}};
    for (int s = 0; s < sn; ++s) b.vertices.push_back(m + j * sn + s);
    rep.blocks.push_back(std::move(b));
  }
  ColouredBipartiteGraph g(m, n, r);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = x / sm;
      const int j = y / sn;
      g.set_colour(x, y, ((i - j) % r + r) % r + 1);
    }
  rep.bipartite = std::move(g);
  rep.claimed_bound = (m + n) / r;
  return rep;
}

}  // namespace monoconn
