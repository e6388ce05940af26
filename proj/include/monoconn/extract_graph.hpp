#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoconn/arith.hpp"
#include "monoconn/connectivity.hpp"
#include "monoconn/extract_report.hpp"

namespace monoconn {

namespace detail {

// Same as finish() for extractors that work on a plain graph: the witness
// carries no colours and is checked inside g.
inline ExtractionReport finish_graph(Recorder& rec, const SimpleGraph& g, std::vector<int> labels, int k,
                                     long long guarantee) {
  std::sort(labels.begin(), labels.end());
  rec.report.witness = SubgraphWitness{std::move(labels), {}, k};
  rec.report.guarantee = guarantee;
  rec.check(static_cast<bool>(is_k_connected(g.induced_by_labels(rec.report.witness.vertices), k)),
            "subgraph failed re-verification");
  rec.check(rec.report.witness.order() >= guarantee, "subgraph order " + std::to_string(rec.report.witness.order()) +
                                                         " below guarantee " + std::to_string(guarantee));
  rec.step("verified", "order " + std::to_string(rec.report.witness.order()) + " >= " + std::to_string(guarantee));
  return std::move(rec.report);
}

// side[v] = 0 for the M part, 1 for the N part (local indices of g).
inline std::vector<int> bipartition(const SimpleGraph& g, std::span<const int> m_side, std::span<const int> n_side) {
  require(static_cast<int>(m_side.size() + n_side.size()) == g.order(), "declared parts must partition the vertex set");
  std::vector<int> side(g.order(), -1);
  for (int v : m_side) {
    require(v >= 0 && v < g.order() && side[v] == -1, "declared parts overlap or leave the graph");
    side[v] = 0;
  }
  for (int v : n_side) {
    require(v >= 0 && v < g.order() && side[v] == -1, "declared parts overlap or leave the graph");
    side[v] = 1;
  }
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbours(v)) require(side[v] != side[w], "graph is not bipartite with the declared parts");
  return side;
}

// e * D > q (m - ell)(n - ell) + (ell^2 + ell) D^2 with D = m + n - 2 ell,
// i.e. e exceeds the bound on edges of a bipartite graph with no
// (ell+1)-connected subgraph on q or more vertices.
inline bool exceeds_turan(long long e, long long m, long long n, long long ell, long long q) {
  const __int128 d = m + n - 2 * ell;
  const __int128 lhs = static_cast<__int128>(e) * d;
  const __int128 rhs = static_cast<__int128>(q) * (m - ell) * (n - ell) + static_cast<__int128>(ell * ell + ell) * d * d;
  return lhs > rhs;
}

}  // namespace detail

// Finds a k-connected subgraph of a graph with average degree >= 4k. Keeps a
// candidate H with |H| >= 2k-1 and e(H) >= (2k-3)(|H|-k+1)+1: peel vertices of
// degree <= 2k-3, and while H is not k-connected, split along a small cut and
// keep a side that still meets the edge condition.
inline ExtractionReport extract_mader(const SimpleGraph& g, int k) {
  detail::require(k >= 1, "k must be at least 1");
  const int m = g.order();
  detail::require(m >= 1, "graph is empty");
  detail::require(2 * g.edge_count() >= 4LL * k * m,
                  "average degree " + std::to_string(2.0 * static_cast<double>(g.edge_count()) / m) + " below 4k = " +
                      std::to_string(4 * k));
  detail::Recorder rec;
  const long long slope = 2LL * k - 3;
  auto qualifies = [&](const SimpleGraph& h) {
    const long long size = h.order();
    return size >= 2LL * k - 1 && h.edge_count() >= std::max(1LL, slope * (size - k + 1) + 1);
  };

  std::vector<int> current(m);
  for (int v = 0; v < m; ++v) current[v] = v;
  int splits = 0;
  long long peeled = 0;
  for (;;) {
    SimpleGraph h = g.induced(current);
    std::vector<bool> removed(h.order(), false);
    std::vector<int> degree(h.order());
    for (int v = 0; v < h.order(); ++v) degree[v] = h.degree(v);
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < h.order(); ++v) {
        if (removed[v] || degree[v] > slope) continue;
        removed[v] = changed = true;
        ++peeled;
        for (int w : h.neighbours(v)) --degree[w];
      }
    }
    std::vector<int> kept;
    for (int v = 0; v < h.order(); ++v)
      if (!removed[v]) kept.push_back(current[v]);
    h = g.induced(kept);
    current = kept;
    rec.check(qualifies(h), "candidate lost the edge condition after peeling");

    auto res = is_k_connected(h, k);
    if (res) break;
    rec.check(res.cut.has_value(), "no cut certificate for a candidate that is not k-connected");
    const auto sep = detail::locals(h, res.cut->separator);
    std::vector<bool> cut(h.order(), false);
    for (int v : sep) cut[v] = true;
    const auto comps = components(h, cut);
    rec.check(comps.size() >= 2, "cut does not separate the candidate");
    std::vector<int> side1 = sep;
    side1.insert(side1.end(), comps[0].begin(), comps[0].end());
    std::vector<int> side2 = sep;
    for (std::size_t c = 1; c < comps.size(); ++c) side2.insert(side2.end(), comps[c].begin(), comps[c].end());
    const SimpleGraph h1 = h.induced(side1);
    const SimpleGraph h2 = h.induced(side2);
    const bool ok1 = qualifies(h1);
    const bool ok2 = qualifies(h2);
    rec.check(ok1 || ok2, "neither side of the cut meets the edge condition");
    const bool first = ok1 && (!ok2 || h1.edge_count() >= h2.edge_count());
    const auto& chosen = first ? side1 : side2;
    std::vector<int> next;
    for (int v : chosen) next.push_back(current[v]);
    std::sort(next.begin(), next.end());
    rec.check(next.size() < current.size(), "recursion did not shrink the candidate");
    current = std::move(next);
    ++splits;
  }
  rec.step("mader", std::to_string(splits) + " splits, " + std::to_string(peeled) + " vertices peeled");
  rec.stat("splits", splits);
  rec.stat("peeled", peeled);
  return detail::finish_graph(rec, g, detail::labels_of(g, current), k, k + 1);
}

// Component containing the edge xy maximising d(x) + d(y); it has at least
// e(m+n)/(mn) vertices. Sides are local indices.
inline ExtractionReport extract_bip_component(const SimpleGraph& g, std::span<const int> m_side,
                                              std::span<const int> n_side) {
  detail::bipartition(g, m_side, n_side);
  const long long e = g.edge_count();
  detail::require(e >= 1, "bipartite graph has no edges");
  const long long m = static_cast<long long>(m_side.size());
  const long long n = static_cast<long long>(n_side.size());
  int bx = -1;
  int by = -1;
  for (int x = 0; x < g.order(); ++x)
    for (int y : g.neighbours(x))
      if (x < y && (bx < 0 || g.degree(x) + g.degree(y) > g.degree(bx) + g.degree(by))) {
        bx = x;
        by = y;
      }
  detail::Recorder rec;
  rec.step("densest-edge", "edge " + std::to_string(g.label(bx)) + "-" + std::to_string(g.label(by)) + " with d(x)+d(y) = " +
                               std::to_string(g.degree(bx) + g.degree(by)));
  std::vector<int> comp;
  for (const auto& c : components(g))
    if (std::binary_search(c.begin(), c.end(), bx)) comp = c;
  rec.check(static_cast<long long>(comp.size()) * m * n >= e * (m + n), "component smaller than e(m+n)/(mn)");
  rec.stat("edges", e);
  return detail::finish_graph(rec, g, detail::labels_of(g, comp), 1, detail::ceil_div(e * (m + n), m * n));
}

struct BipExtraction {
  std::optional<ExtractionReport> report;
  std::string refusal;  // set iff report is empty

  explicit operator bool() const { return report.has_value(); }
};

// If e(G) exceeds q(m-ell)(n-ell)/(m+n-2ell) + (ell^2+ell)(m+n-2ell), returns
// an (ell+1)-connected subgraph on >= q vertices by following the inductive
// proof: split along a padded cut and descend into a side that is still over
// its own bound. Otherwise refuses. Sides are local indices.
inline BipExtraction extract_r1kbip(const SimpleGraph& g, std::span<const int> m_side, std::span<const int> n_side,
                                    int ell, int q) {
  detail::require(ell >= 0, "ell must be non-negative");
  detail::require(q >= 1, "q must be positive");
  const int m = static_cast<int>(m_side.size());
  const int n = static_cast<int>(n_side.size());
  detail::require(m >= ell && n >= ell, "both parts need at least ell vertices");
  detail::require(m + n >= 2 * ell + 1, "parts need at least 2 ell + 1 vertices in total");
  const auto side = detail::bipartition(g, m_side, n_side);

  BipExtraction out;
  if (!detail::exceeds_turan(g.edge_count(), m, n, ell, q)) {
    out.refusal = "e(G) = " + std::to_string(g.edge_count()) + " does not exceed the bound for m = " + std::to_string(m) +
                  ", n = " + std::to_string(n) + ", ell = " + std::to_string(ell) + ", q = " + std::to_string(q);
    return out;
  }

  detail::Recorder rec;
  std::vector<int> current(g.order());
  for (int v = 0; v < g.order(); ++v) current[v] = v;
  int depth = 0;
  for (;;) {
    const SimpleGraph h = g.induced(current);
    std::vector<int> hm, hn;
    for (int v = 0; v < h.order(); ++v) (side[current[v]] == 0 ? hm : hn).push_back(v);
    rec.check(static_cast<int>(hm.size()) > ell && static_cast<int>(hn.size()) > ell,
              "reached a part of size ell while over the edge bound");
    rec.check(q <= h.order(), "reached fewer than q vertices while over the edge bound");
    auto res = is_k_connected(h, ell + 1);
    if (res) break;
    rec.check(res.cut.has_value(), "no cut certificate");

    std::vector<bool> in_cut(h.order(), false);
    for (int v : detail::locals(h, res.cut->separator)) in_cut[v] = true;
    const auto comps = components(h, in_cut);
    std::vector<int> comp_of(h.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    // x in M and y in N on different sides of the cut.
    int x = -1;
    int y = -1;
    for (int a : hm) {
      if (in_cut[a]) continue;
      for (int b : hn)
        if (!in_cut[b] && comp_of[b] != comp_of[a]) {
          x = a;
          y = b;
          break;
        }
      if (x >= 0) break;
    }
    rec.check(x >= 0, "no separated M-N pair across the cut");
    // Pad the cut to exactly ell vertices on each side.
    auto pad = [&](const std::vector<int>& part, int avoid) {
      int have = 0;
      for (int v : part) have += in_cut[v];
      for (int v : part) {
        if (have >= ell) break;
        if (!in_cut[v] && v != avoid) {
          in_cut[v] = true;
          ++have;
        }
      }
      rec.check(have == ell, "cannot pad the cut to ell vertices on a side");
    };
    pad(hm, x);
    pad(hn, y);
    const auto padded_comps = components(h, in_cut);
    std::vector<int> side1, side2;
    for (int v = 0; v < h.order(); ++v)
      if (in_cut[v]) {
        side1.push_back(v);
        side2.push_back(v);
      }
    for (const auto& c : padded_comps) {
      const bool has_x = std::binary_search(c.begin(), c.end(), x);
      auto& target = has_x ? side1 : side2;
      target.insert(target.end(), c.begin(), c.end());
    }
    std::vector<int> next;
    for (const auto* child : {&side1, &side2}) {
      const SimpleGraph hc = h.induced(*child);
      int mc = 0;
      for (int v : *child) mc += side[current[v]] == 0;
      if (detail::exceeds_turan(hc.edge_count(), mc, hc.order() - mc, ell, q)) {
        for (int v : *child) next.push_back(current[v]);
        break;
      }
    }
    rec.check(!next.empty(), "neither child is over its edge bound");
    std::sort(next.begin(), next.end());
    rec.check(next.size() < current.size(), "recursion did not shrink");
    current = std::move(next);
    ++depth;
    rec.check(depth <= m + n, "recursion deeper than m + n");
  }
  rec.step("r1kbip", "depth " + std::to_string(depth) + ", order " + std::to_string(current.size()));
  rec.stat("depth", depth);
  out.report = detail::finish_graph(rec, g, detail::labels_of(g, current), ell + 1, q);
  return out;
}

}  // namespace monoconn
