#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "monoconn/errors.hpp"

namespace monoconn {

using Colour = int;  // 1-indexed, matching the colour set [r]

// Fixed-width set of small integers backed by 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // |this ∩ other|
  int intersection_count(const Bitset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// An undirected simple graph whose vertices carry labels (vertex ids of some
// ambient K_n). Operations address vertices by local index 0..order()-1;
// labels are kept sorted so that local order and label order agree.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::vector<int> labels) : labels_(std::move(labels)) {
    detail::require(std::is_sorted(labels_.begin(), labels_.end()) &&
                        std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(),
                    "SimpleGraph labels must be strictly increasing");
    const int m = order();
    adj_.assign(m, {});
    rows_.assign(m, Bitset(m));
  }

  static SimpleGraph with_order(int m) {
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 0);
    return SimpleGraph(std::move(labels));
  }

  int order() const { return static_cast<int>(labels_.size()); }
  std::span<const int> labels() const { return labels_; }
  int label(int u) const { return labels_[u]; }

  // Local index of `label`, or -1.
  int index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
  }

  void add_edge(int u, int v) {
    detail::require(u != v, "SimpleGraph does not admit loops");
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
  }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  std::span<const int> neighbours(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  const Bitset& row(int u) const { return rows_[u]; }
  long long edge_count() const { return edges_; }

  // Subgraph induced by the given local indices (any order, no repeats).
  SimpleGraph induced(std::span<const int> local) const {
    std::vector<int> sorted(local.begin(), local.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> labels;
    labels.reserve(sorted.size());
    for (int u : sorted) labels.push_back(labels_[u]);
    SimpleGraph h(std::move(labels));
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        if (adjacent(sorted[i], sorted[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
  }

  // Subgraph induced by vertices given as labels.
  SimpleGraph induced_by_labels(std::span<const int> labels) const {
    std::vector<int> local;
    local.reserve(labels.size());
    for (int l : labels) {
      int u = index_of(l);
      detail::require(u >= 0, "label " + std::to_string(l) + " is not a vertex of the graph");
      local.push_back(u);
    }
    return induced(local);
  }

 private:
  std::vector<int> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> rows_;
  long long edges_ = 0;
};

// An r-colouring of E(K_n): every unordered pair {u, v}, u != v, has exactly
// one colour in 1..r.
class ColouredCompleteGraph {
 public:
  ColouredCompleteGraph(int n, int r, Colour fill = 1) : n_(n), r_(r) {
    detail::require(n >= 2, "a coloured complete graph needs n >= 2");
    detail::require(r >= 1 && r <= 255, "colour count must lie in 1..255");
    detail::require(fill >= 1 && fill <= r, "fill colour out of range");
    colour_.assign(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(fill));
    for (int v = 0; v < n; ++v) colour_[static_cast<std::size_t>(v) * n + v] = 0;
  }

  // Builds the colouring whose pair {u, v} (u < v) receives f(u, v).
  template <class F>
  static ColouredCompleteGraph from_function(int n, int r, F&& f) {
    ColouredCompleteGraph g(n, r);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.set_colour(u, v, f(u, v));
    return g;
  }

  int order() const { return n_; }
  int colours() const { return r_; }

  Colour colour(int u, int v) const { return colour_[static_cast<std::size_t>(u) * n_ + v]; }

  void set_colour(int u, int v, Colour c) {
    detail::require(u != v && u >= 0 && v >= 0 && u < n_ && v < n_, "invalid vertex pair");
    detail::require(c >= 1 && c <= r_, "colour " + std::to_string(c) + " outside 1..r");
    colour_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(c);
    colour_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(c);
  }

  // Number of colour-c edges from v into `targets` (v itself is skipped).
  int degree_into(int v, Colour c, std::span<const int> targets) const {
    int d = 0;
    for (int w : targets)
      if (w != v && colour(v, w) == c) ++d;
    return d;
  }

  long long edge_count(Colour c) const {
    long long e = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) e += colour(u, v) == c;
    return e;
  }

  // Graph on `vertices` (sorted labels) whose edges are the pairs coloured c.
  SimpleGraph colour_graph(Colour c, std::span<const int> vertices) const {
    return colour_graph(std::vector<Colour>{c}, vertices);
  }

  SimpleGraph colour_graph(Colour c) const { return colour_graph(c, all_vertices()); }

  // Graph on `vertices` whose edges are the pairs coloured inside `palette`.
  SimpleGraph colour_graph(std::span<const Colour> palette, std::span<const int> vertices) const {
    std::vector<int> labels(vertices.begin(), vertices.end());
    std::sort(labels.begin(), labels.end());
    std::vector<bool> allowed(r_ + 1, false);
    for (Colour c : palette)
      if (c >= 1 && c <= r_) allowed[c] = true;
    SimpleGraph g(labels);
    const int m = g.order();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (allowed[colour(labels[i], labels[j])]) g.add_edge(i, j);
    return g;
  }

  // Bipartite graph of colour-c edges between disjoint vertex sets a and b.
  SimpleGraph bipartite_graph(Colour c, std::span<const int> a, std::span<const int> b) const {
    std::vector<int> labels(a.begin(), a.end());
    labels.insert(labels.end(), b.begin(), b.end());
    std::sort(labels.begin(), labels.end());
    SimpleGraph g(labels);
    for (int x : a)
      for (int y : b)
        if (colour(x, y) == c) g.add_edge(g.index_of(x), g.index_of(y));
    return g;
  }

  std::vector<int> all_vertices() const {
    std::vector<int> v(n_);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  friend bool operator==(const ColouredCompleteGraph&, const ColouredCompleteGraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<std::uint8_t> colour_;
};

// An r-colouring of E(K_{m,n}); part M is 0..m-1 and part N is m..m+n-1.
class ColouredBipartiteGraph {
 public:
  ColouredBipartiteGraph(int m, int n, int r, Colour fill = 1)
      : m_(m), n_(n), r_(r), colour_(static_cast<std::size_t>(m) * n, static_cast<std::uint8_t>(fill)) {
    detail::require(m >= 1 && n >= 1, "bipartite parts must be non-empty");
    detail::require(r >= 1 && r <= 255, "colour count must lie in 1..255");
  }

  int left() const { return m_; }
  int right() const { return n_; }
  int colours() const { return r_; }

  // i in 0..m-1, j in 0..n-1 (part-local indices).
  Colour colour(int i, int j) const { return colour_[static_cast<std::size_t>(i) * n_ + j]; }
  void set_colour(int i, int j, Colour c) {
    detail::require(c >= 1 && c <= r_, "colour outside 1..r");
    colour_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(c);
  }

  // Colour-c graph on all m+n vertices.
  SimpleGraph colour_graph(Colour c) const {
    SimpleGraph g = SimpleGraph::with_order(m_ + n_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        if (colour(i, j) == c) g.add_edge(i, m_ + j);
    return g;
  }

  friend bool operator==(const ColouredBipartiteGraph&, const ColouredBipartiteGraph&) = default;

 private:
  int m_;
  int n_;
  int r_;
  std::vector<std::uint8_t> colour_;
};

}  // namespace monoconn
