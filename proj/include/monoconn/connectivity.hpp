#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "monoconn/errors.hpp"
#include "monoconn/graph.hpp"

namespace monoconn {

// Proof that a graph is not k-connected: deleting `separator` (fewer than k
// vertices) leaves `a` and `b` in different components. All ids are labels.
struct CutCertificate {
  std::vector<int> separator;
  int a = -1;
  int b = -1;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

struct ConnectivityResult {
  int kappa = 0;
  std::optional<CutCertificate> cut;
};

struct KConnectedResult {
  bool connected = false;
  std::optional<CutCertificate> cut;  // set on "no" whenever order() >= k + 1
  explicit operator bool() const { return connected; }
};

namespace detail {

// Unit-capacity flow network for local vertex connectivity. Vertex v becomes
// in(v) = 2v -> out(v) = 2v + 1 with capacity 1; an edge uv becomes arcs
// out(u) -> in(v) and out(v) -> in(u).
class SplitFlow {
 public:
  explicit SplitFlow(const SimpleGraph& g) : graph_(g), nodes_(2 * g.order()) {
    const int m = g.order();
    std::vector<int> out_degree(nodes_, 0);
    for (int v = 0; v < m; ++v) {
      ++out_degree[in(v)];
      ++out_degree[out(v)];
      for (int w : g.neighbours(v)) {
        ++out_degree[out(v)];
        ++out_degree[in(w)];
      }
    }
    head_.assign(nodes_ + 1, 0);
    for (int x = 0; x < nodes_; ++x) head_[x + 1] = head_[x] + out_degree[x];
    arcs_.resize(head_[nodes_]);
    std::vector<int> fill(head_.begin(), head_.end() - 1);
    auto add = [&](int from, int to, int cap) {
      int a = fill[from]++;
      int b = fill[to]++;
      arcs_[a] = {to, b, cap};
      arcs_[b] = {from, a, 0};
    };
    // Edge arcs are uncapped so every minimum cut consists of in->out arcs.
    for (int v = 0; v < m; ++v) {
      add(in(v), out(v), 1);
      for (int w : g.neighbours(v)) add(out(v), in(w), m);
    }
    original_.reserve(arcs_.size());
    for (const auto& a : arcs_) original_.push_back(a.cap);
  }

  // Number of internally disjoint s-t paths for non-adjacent s, t, stopping
  // once `limit` is reached. Common neighbours are routed first as paths of
  // length two, which is exact for dense graphs and saves augmentations.
  int local_connectivity(int s, int t, int limit) {
    reset();
    int flow = 0;
    for (int w : graph_.neighbours(s)) {
      if (flow >= limit) break;
      if (!graph_.row(t).test(w)) continue;
      push(out(s), in(w));
      push(in(w), out(w));
      push(out(w), in(t));
      ++flow;
    }
    // Dinic phases: one BFS layering, then blocking-flow DFS.
    while (flow < limit) {
      if (!layer(out(s), in(t))) return flow;
      next_arc_.assign(head_.begin(), head_.end() - 1);
      while (flow < limit && advance(out(s), in(t))) ++flow;
    }
    return flow;
  }

  // Minimum s-t separator of the last run that stopped below its limit:
  // vertices whose in-node is reachable in the residual graph but whose
  // out-node is not.
  std::vector<int> separator() const {
    std::vector<int> sep;
    for (int v = 0; v < graph_.order(); ++v)
      if (seen_[in(v)] && !seen_[out(v)]) sep.push_back(v);
    return sep;
  }

 private:
  struct Arc {
    int to;
    int rev;
    int cap;
  };

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void reset() {
    for (int a : dirty_) arcs_[a].cap = original_[a];
    dirty_.clear();
  }

  void use(int a) {
    --arcs_[a].cap;
    ++arcs_[arcs_[a].rev].cap;
    dirty_.push_back(a);
    dirty_.push_back(arcs_[a].rev);
  }

  void push(int from, int to) {
    for (int a = head_[from]; a < head_[from + 1]; ++a) {
      if (arcs_[a].to == to && arcs_[a].cap > 0) {
        use(a);
        return;
      }
    }
    throw InvariantError("flow pre-routing found no residual arc");
  }

  // BFS levels over residual arcs; seen_ doubles as the reachable set read
  // by separator() once the sink drops out.
  bool layer(int source, int sink) {
    seen_.assign(nodes_, false);
    level_.assign(nodes_, -1);
    std::queue<int> frontier;
    frontier.push(source);
    seen_[source] = true;
    level_[source] = 0;
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop();
      // Nodes at or past the sink's level never lie on a shortest path.
      if (seen_[sink] && level_[x] >= level_[sink]) break;
      for (int a = head_[x]; a < head_[x + 1]; ++a) {
        const Arc& arc = arcs_[a];
        if (arc.cap <= 0 || seen_[arc.to]) continue;
        seen_[arc.to] = true;
        level_[arc.to] = level_[x] + 1;
        frontier.push(arc.to);
      }
    }
    return seen_[sink];
  }

  bool advance(int x, int sink) {
    if (x == sink) return true;
    for (int& a = next_arc_[x]; a < head_[x + 1]; ++a) {
      const Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      if (advance(arc.to, sink)) {
        use(a);
        return true;
      }
    }
    return false;
  }

  const SimpleGraph& graph_;
  int nodes_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> original_;
  std::vector<bool> seen_;
  std::vector<int> level_;
  std::vector<int> next_arc_;
  std::vector<int> dirty_;
};

inline CutCertificate make_certificate(const SimpleGraph& g, std::vector<int> local_sep, int a, int b) {
  CutCertificate cert;
  std::sort(local_sep.begin(), local_sep.end());
  for (int v : local_sep) cert.separator.push_back(g.label(v));
  cert.a = g.label(a);
  cert.b = g.label(b);
  return cert;
}

inline int first_non_neighbour(const SimpleGraph& g, int v) {
  for (int w = 0; w < g.order(); ++w)
    if (w != v && !g.adjacent(v, w)) return w;
  return -1;
}

}  // namespace detail

// Exact vertex connectivity. Complete graphs have kappa = |V| - 1 and no cut;
// otherwise `cut` is a minimum separator together with a pair it separates.
inline ConnectivityResult vertex_connectivity(const SimpleGraph& g) {
  const int m = g.order();
  detail::require(m >= 2, "vertex connectivity needs at least 2 vertices");
  int min_v = 0;
  for (int v = 1; v < m; ++v)
    if (g.degree(v) < g.degree(min_v)) min_v = v;
  if (g.degree(min_v) == m - 1) return {m - 1, std::nullopt};

  // N(v) for a minimum-degree vertex is always a separator of size delta.
  int best = g.degree(min_v);
  std::vector<int> nbrs(g.neighbours(min_v).begin(), g.neighbours(min_v).end());
  CutCertificate cut = detail::make_certificate(g, nbrs, min_v, detail::first_non_neighbour(g, min_v));

  // A minimum separator misses one of the first kappa + 1 vertices, and that
  // vertex has a non-neighbour on the far side.
  detail::SplitFlow flow(g);
  for (int i = 0; i < m && i <= best; ++i) {
    for (int w = 0; w < m; ++w) {
      if (w == i || g.adjacent(i, w)) continue;
      if (g.row(i).intersection_count(g.row(w)) >= best) continue;
      int f = flow.local_connectivity(i, w, best);
      if (f < best) {
        best = f;
        cut = detail::make_certificate(g, flow.separator(), i, w);
      }
    }
  }
  return {best, cut};
}

// True iff |V(G)| >= k + 1 and no set of at most k - 1 vertices disconnects G.
inline KConnectedResult is_k_connected(const SimpleGraph& g, int k) {
  detail::require(k >= 1, "k must be at least 1");
  const int m = g.order();
  if (m <= k) return {false, std::nullopt};
  for (int v = 0; v < m; ++v) {
    if (g.degree(v) < k) {
      std::vector<int> nbrs(g.neighbours(v).begin(), g.neighbours(v).end());
      return {false, detail::make_certificate(g, nbrs, v, detail::first_non_neighbour(g, v))};
    }
  }
  std::optional<detail::SplitFlow> flow;
  for (int i = 0; i < k; ++i) {
    for (int w = 0; w < m; ++w) {
      if (w == i || g.adjacent(i, w)) continue;
      if (g.row(i).intersection_count(g.row(w)) >= k) continue;
      if (!flow) flow.emplace(g);
      if (flow->local_connectivity(i, w, k) < k)
        return {false, detail::make_certificate(g, flow->separator(), i, w)};
    }
  }
  return {true, std::nullopt};
}

// Local indices of the connected components, each sorted, in order of their
// smallest vertex. Vertices flagged in `removed` are skipped.
inline std::vector<std::vector<int>> components(const SimpleGraph& g, const std::vector<bool>& removed = {}) {
  const int m = g.order();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0 || (!removed.empty() && removed[s])) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (int y : g.neighbours(x)) {
        if (comp[y] >= 0 || (!removed.empty() && removed[y])) continue;
        comp[y] = id;
        stack.push_back(y);
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline int largest_component_order(const SimpleGraph& g) {
  int best = 0;
  for (const auto& c : components(g)) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

// Replays a certificate: delete the separator and test reachability of a, b.
inline bool replay_cut(const SimpleGraph& g, const CutCertificate& cert) {
  int a = g.index_of(cert.a);
  int b = g.index_of(cert.b);
  if (a < 0 || b < 0 || a == b) return false;
  std::vector<bool> removed(g.order(), false);
  for (int s : cert.separator) {
    int v = g.index_of(s);
    if (v < 0 || v == a || v == b) return false;
    removed[v] = true;
  }
  for (const auto& c : components(g, removed)) {
    bool has_a = std::binary_search(c.begin(), c.end(), a);
    bool has_b = std::binary_search(c.begin(), c.end(), b);
    if (has_a || has_b) return !(has_a && has_b);
  }
  return false;
}

// Sufficient condition for k-connectivity of a bipartite graph: every vertex
// of `m_side` has degree >= k and every pair in `n_side` has >= k common
// neighbours. Both sides are local indices and together must cover g.
inline bool certify_intersect(const SimpleGraph& g, std::span<const int> m_side, std::span<const int> n_side, int k) {
  detail::require(static_cast<int>(m_side.size() + n_side.size()) == g.order(),
                  "declared parts must partition the vertex set");
  std::vector<int> side(g.order(), -1);
  for (int v : m_side) side[v] = 0;
  for (int v : n_side) {
    detail::require(side[v] == -1, "declared parts overlap");
    side[v] = 1;
  }
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbours(v))
      detail::require(side[v] != side[w], "graph is not bipartite with the declared parts");
  if (g.order() < k + 1) return false;
  for (int x : m_side)
    if (g.degree(x) < k) return false;
  for (std::size_t i = 0; i < n_side.size(); ++i)
    for (std::size_t j = i + 1; j < n_side.size(); ++j)
      if (g.row(n_side[i]).intersection_count(g.row(n_side[j])) < k) return false;
  return true;
}

// Grows a colour-i k-connected vertex set by repeatedly absorbing any vertex
// with at least k colour-i neighbours inside. The result is the unique
// closure: every vertex left outside sends at most k - 1 colour-i edges in.
inline std::vector<int> closure_addvtx(const ColouredCompleteGraph& f, Colour colour, std::span<const int> seed, int k,
                                       bool check_seed = true) {
  std::vector<int> members(seed.begin(), seed.end());
  std::sort(members.begin(), members.end());
  if (check_seed)
    detail::require(static_cast<bool>(is_k_connected(f.colour_graph(colour, members), k)),
                    "closure seed is not k-connected in colour " + std::to_string(colour));
  const int n = f.order();
  std::vector<bool> inside(n, false);
  std::vector<int> into(n, 0);
  for (int v : members) inside[v] = true;
  for (int v = 0; v < n; ++v)
    if (!inside[v]) into[v] = f.degree_into(v, colour, members);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (inside[v] || into[v] < k) continue;
      inside[v] = true;
      grew = true;
      for (int w = 0; w < n; ++w)
        if (!inside[w] && f.colour(v, w) == colour) ++into[w];
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (inside[v]) out.push_back(v);
  return out;
}

// A vertex set and colour set certifying a k-connected subgraph that uses
// only the listed colours.
struct SubgraphWitness {
  std::vector<int> vertices;  // sorted labels
  std::vector<Colour> colours;
  int k = 1;

  int order() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

inline bool verify_witness(const ColouredCompleteGraph& f, const SubgraphWitness& w) {
  if (w.order() < w.k + 1) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= f.order()) return false;
  return static_cast<bool>(is_k_connected(f.colour_graph(w.colours, w.vertices), w.k));
}

}  // namespace monoconn
