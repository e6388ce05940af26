#pragma once

#include <string>
#include <vector>

#include "monoconn/connectivity.hpp"
#include "monoconn/extract_report.hpp"

namespace monoconn {

namespace detail {

struct DegsOutcome {
  Colour colour = 1;
  std::vector<int> vertices;
  std::vector<int> cut;  // the main-colour separator when that colour is not k-connected
  bool main_connected = false;
};

// Lemma on F[vertices] where every vertex has main-colour degree >= 2k-2
// inside `vertices`: either the main colour is k-connected there, or the
// other colour is k-connected on everything but a main-colour cut.
inline DegsOutcome degs_core(const ColouredCompleteGraph& f, std::span<const int> vertices, Colour main, int k) {
  const SimpleGraph g = f.colour_graph(main, vertices);
  auto res = is_k_connected(g, k);
  DegsOutcome out;
  if (res) {
    out.colour = main;
    out.vertices.assign(vertices.begin(), vertices.end());
    out.main_connected = true;
    return out;
  }
  ensure(res.cut.has_value(), "degree condition should rule out graphs on at most k vertices");
  out.colour = 3 - main;
  out.cut = res.cut->separator;
  out.vertices = set_minus(vertices, out.cut);
  return out;
}

}  // namespace detail

// Two-colouring with every red (colour `red`) degree >= 2k-2: returns all of
// V in red if red is k-connected, else the blue complete multipartite graph
// left after deleting a red cut of size <= k-1.
inline ExtractionReport extract_degs(const ColouredCompleteGraph& f, int k, Colour red = 1) {
  detail::require(f.colours() == 2, "degs needs a 2-colouring");
  detail::require(k >= 1, "k must be at least 1");
  detail::require(red == 1 || red == 2, "colour must be 1 or 2");
  const int n = f.order();
  const auto all = f.all_vertices();
  for (int v = 0; v < n; ++v) {
    const int d = f.degree_into(v, red, all);
    if (d < 2 * k - 2)
      throw PreconditionError("vertex " + std::to_string(v) + " has colour-" + std::to_string(red) + " degree " +
                              std::to_string(d) + " < 2k-2 = " + std::to_string(2 * k - 2));
  }
  detail::Recorder rec;
  auto out = detail::degs_core(f, all, red, k);
  if (out.main_connected)
    rec.step("degs-main", "colour " + std::to_string(red) + " is k-connected on V");
  else
    rec.step("degs-other", "colour-" + std::to_string(red) + " cut " + detail::describe(out.cut) + "; colour " +
                               std::to_string(out.colour) + " on the rest");
  return detail::finish(rec, f, out.vertices, out.colour, k, n - k + 1);
}

// m(n,2,1,k) >= n-2k+2 for n >= 13k-15 (or n >= (9+sqrt10)k with k >= 18 when
// `alpha_threshold` is set), following the peeling proof step by step.
inline ExtractionReport extract_thm21k(const ColouredCompleteGraph& f, int k, bool alpha_threshold = false) {
  detail::require(f.colours() == 2, "thm21k needs a 2-colouring");
  detail::require(k >= 1, "k must be at least 1");
  const long long n = f.order();
  if (alpha_threshold) {
    detail::require(k >= 18, "the (9+sqrt10)k threshold needs k >= 18");
    const long long slack = n - 9LL * k;
    detail::require(slack >= 0 && slack * slack >= 10LL * k * k,
                    "n >= (9+sqrt10)k violated (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  } else {
    detail::require(n >= 13LL * k - 15,
                    "n >= 13k-15 violated (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  const long long guarantee = n - 2LL * k + 2;
  const auto all = f.all_vertices();
  detail::Recorder rec;

  // If some colour has all degrees >= 2k-2 the lemma already does better.
  for (Colour c : {1, 2}) {
    bool high = true;
    for (int v = 0; v < n && high; ++v) high = f.degree_into(v, c, all) >= 2 * k - 2;
    if (!high) continue;
    auto out = detail::degs_core(f, all, c, k);
    rec.step("degs", "every colour-" + std::to_string(c) + " degree is >= 2k-2");
    return detail::finish(rec, f, out.vertices, out.colour, k, guarantee);
  }

  // X, Y: repeatedly strip the smallest vertex of degree <= 2k-3 in what is
  // left of the red (blue) graph.
  auto peel = [&](Colour c) {
    std::vector<bool> gone(n, false);
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = f.degree_into(v, c, all);
    std::vector<int> out;
    for (;;) {
      int pick = -1;
      for (int v = 0; v < n && pick < 0; ++v)
        if (!gone[v] && degree[v] <= 2 * k - 3) pick = v;
      if (pick < 0) break;
      gone[pick] = true;
      out.push_back(pick);
      for (int w = 0; w < n; ++w)
        if (!gone[w] && w != pick && f.colour(pick, w) == c) --degree[w];
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto x = peel(1);
  const auto y = peel(2);
  const long long p = static_cast<long long>(x.size());
  const long long q = static_cast<long long>(y.size());
  const long long overlap = static_cast<long long>(detail::set_intersection(x, y).size());
  rec.stat("p", p);
  rec.stat("q", q);
  rec.stat("overlap", overlap);
  rec.step("peel", "|X| = " + std::to_string(p) + ", |Y| = " + std::to_string(q) + ", |X n Y| = " + std::to_string(overlap));
  rec.check(std::min(p, q) <= 8LL * k - 11, "Claim 1: min(p, q) <= 8k-11 failed");

  // Work with the smaller set; when that is Y the colours swap roles.
  const Colour main = p <= q ? 1 : 2;
  const Colour other = 3 - main;
  const auto& low = main == 1 ? x : y;
  rec.step("smaller-side", "peeled set of colour " + std::to_string(main) + " has " + std::to_string(low.size()) +
                               " vertices");
  const auto rest = detail::set_minus(all, low);
  for (int v : rest)
    rec.check(f.degree_into(v, main, rest) >= 2 * k - 2, "peeled set is not maximal");

  auto residual = detail::degs_core(f, rest, main, k);
  if (!residual.main_connected) {
    // Every peeled vertex sends > k other-colour edges into H, so the closure
    // of H swallows all of them.
    auto grown = closure_addvtx(f, other, residual.vertices, k);
    rec.check(std::includes(grown.begin(), grown.end(), low.begin(), low.end()),
              "closure of the residual other-colour subgraph missed a peeled vertex");
    rec.step("residual-other", "colour " + std::to_string(main) + " minus the peeled set is not k-connected; colour " +
                                   std::to_string(other) + " absorbs the peeled set");
    return detail::finish(rec, f, grown, other, k, guarantee);
  }
  rec.step("residual-main", "colour " + std::to_string(main) + " minus the peeled set is k-connected");

  // Migrate peeled vertices with >= k main-colour edges into M'.
  const auto m_prime = closure_addvtx(f, main, rest, k, false);
  const auto n_set = detail::set_minus(all, m_prime);
  rec.stat("N", static_cast<long long>(n_set.size()));
  rec.step("migrate", "|M'| = " + std::to_string(m_prime.size()) + ", |N| = " + std::to_string(n_set.size()));
  if (static_cast<long long>(n_set.size()) <= 2LL * k - 2) {
    rec.step("small-N", "|N| <= 2k-2, M' is the answer");
    return detail::finish(rec, f, m_prime, main, k, guarantee);
  }

  std::vector<int> u_set;
  std::vector<int> m_set;
  for (int v : m_prime) (f.degree_into(v, other, n_set) <= k - 1 ? u_set : m_set).push_back(v);
  rec.stat("U", static_cast<long long>(u_set.size()));
  rec.stat("M", static_cast<long long>(m_set.size()));
  rec.step("strip-U", "U = " + detail::describe(u_set));
  rec.check(static_cast<long long>(u_set.size()) <= 2LL * k - 2, "|U| <= 2k-2 failed");
  rec.check(static_cast<long long>(m_set.size()) >= 3LL * k - 2, "|M| >= 3k-2 failed");
  const SimpleGraph g = f.bipartite_graph(other, m_set, n_set);
  rec.check(certify_intersect(g, detail::locals(g, m_set), detail::locals(g, n_set), k),
            "bipartite graph B[M,N] does not satisfy the intersection condition");
  rec.step("intersect", "colour " + std::to_string(other) + " on M u N is k-connected");
  return detail::finish(rec, f, detail::set_union(m_set, n_set), other, k, guarantee);
}

}  // namespace monoconn
