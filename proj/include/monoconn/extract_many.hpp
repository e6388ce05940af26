#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "monoconn/arith.hpp"
#include "monoconn/connectivity.hpp"
#include "monoconn/extract_graph.hpp"
#include "monoconn/extract_report.hpp"

namespace monoconn {

// r-colouring, k = 1: a spanning colour-1 component, or the densest colour
// across the largest colour-1 component and the rest.
inline ExtractionReport extract_r11(const ColouredCompleteGraph& f) {
  const long long n = f.order();
  const int r = f.colours();
  const long long guarantee = r == 1 ? n : detail::ceil_div(n, r - 1);
  detail::Recorder rec;
  const SimpleGraph g1 = f.colour_graph(1);
  std::vector<int> c_set;
  for (const auto& comp : components(g1))
    if (comp.size() > c_set.size()) c_set = comp;
  c_set = detail::labels_of(g1, c_set);
  if (static_cast<long long>(c_set.size()) == n) {
    rec.step("spanning", "colour 1 is connected");
    return detail::finish(rec, f, c_set, 1, 1, guarantee);
  }
  const auto d_set = detail::complement(static_cast<int>(n), c_set);
  Colour best = 2;
  long long best_edges = -1;
  for (Colour c = 2; c <= r; ++c) {
    long long e = 0;
    for (int x : c_set)
      for (int y : d_set) e += f.colour(x, y) == c;
    if (e > best_edges) {
      best = c;
      best_edges = e;
    }
  }
  rec.stat("C", static_cast<long long>(c_set.size()));
  rec.step("cross", "|C| = " + std::to_string(c_set.size()) + "; colour " + std::to_string(best) + " has " +
                        std::to_string(best_edges) + " edges across");
  const SimpleGraph b = f.bipartite_graph(best, c_set, d_set);
  auto comp = extract_bip_component(b, detail::locals(b, c_set), detail::locals(b, d_set));
  return detail::finish(rec, f, comp.witness.vertices, best, 1, guarantee);
}

// Colour roles for the three-colour bipartite lemma: the main colour is the
// one returned, P-vertices send few p_limited edges into Q, Q-vertices few
// q_limited edges into P.
struct Roles31 {
  Colour main = 1;
  Colour p_limited = 3;
  Colour q_limited = 2;
};

namespace detail {

// Drops S_P and S_Q and certifies what is left. Hypotheses are assumed.
inline std::vector<int> bip31_core(const ColouredCompleteGraph& f, std::span<const int> p_set,
                                   std::span<const int> q_set, int k, Roles31 roles, Recorder& rec) {
  const long long p = static_cast<long long>(p_set.size());
  const long long q = static_cast<long long>(q_set.size());
  std::vector<int> p_kept, q_kept;
  long long sp = 0, sq = 0;
  for (int v : p_set) {
    if (4LL * f.degree_into(v, roles.main, q_set) <= 3 * q)
      ++sp;
    else
      p_kept.push_back(v);
  }
  for (int v : q_set) {
    if (4LL * f.degree_into(v, roles.main, p_set) <= 3 * p)
      ++sq;
    else
      q_kept.push_back(v);
  }
  rec.stat("S_P", sp);
  rec.stat("S_Q", sq);
  rec.step("bad-sets", "colour " + std::to_string(roles.main) + ": |S_P| = " + std::to_string(sp) +
                           " (proof bound 8k, statement 16k), |S_Q| = " + std::to_string(sq) +
                           " (proof bound 16k, statement 8k)");
  rec.check(sp <= 8LL * k, "|S_P| <= 8k failed");
  rec.check(sq <= 16LL * k, "|S_Q| <= 16k failed");
  const SimpleGraph g = f.bipartite_graph(roles.main, p_kept, q_kept);
  rec.check(certify_intersect(g, locals(g, p_kept), locals(g, q_kept), k),
            "residual bipartite graph fails the intersection condition");
  return set_union(sorted(p_kept), sorted(q_kept));
}

// Complete graph holding a bipartite colouring; pairs inside a part get
// `filler`, which must not be the colour we extract.
inline ColouredCompleteGraph embed_bipartite(const ColouredBipartiteGraph& b, Colour filler) {
  const int m = b.left();
  ColouredCompleteGraph f(m + b.right(), b.colours(), filler);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < b.right(); ++j) f.set_colour(i, m + j, b.colour(i, j));
  return f;
}

}  // namespace detail

// Three colours on K_{P,Q} with 3p >= q >= p >= 24k: removing the vertices
// poor in the main colour leaves a main-colour k-connected graph on
// >= p+q-24k vertices. P and Q are vertex sets of f; only P-Q pairs matter.
inline ExtractionReport extract_31kbip(const ColouredCompleteGraph& f, std::span<const int> p_set,
                                       std::span<const int> q_set, int k, Roles31 roles = {}) {
  detail::require(k >= 1, "k must be at least 1");
  const long long p = static_cast<long long>(p_set.size());
  const long long q = static_cast<long long>(q_set.size());
  detail::require(3 * p >= q && q >= p && p >= 24LL * k, "3p >= q >= p >= 24k violated (p = " + std::to_string(p) +
                                                             ", q = " + std::to_string(q) + ", k = " + std::to_string(k) +
                                                             ")");
  const int r = f.colours();
  for (Colour c : {roles.main, roles.p_limited, roles.q_limited})
    detail::require(c >= 1 && c <= r, "role colour " + std::to_string(c) + " outside 1..r");
  detail::require(roles.main != roles.p_limited && roles.main != roles.q_limited && roles.p_limited != roles.q_limited,
                  "role colours must be distinct");
  std::vector<bool> seen(f.order(), false);
  for (auto part : {p_set, q_set})
    for (int v : part) {
      detail::require(v >= 0 && v < f.order() && !seen[v], "P and Q must be disjoint vertex sets of the colouring");
      seen[v] = true;
    }
  for (int v : p_set) {
    for (int w : q_set) {
      const Colour c = f.colour(v, w);
      if (c != roles.main && c != roles.p_limited && c != roles.q_limited)
        throw PreconditionError("edge " + std::to_string(v) + "-" + std::to_string(w) + " has colour " +
                                std::to_string(c) + " outside the three roles");
    }
    const int d = f.degree_into(v, roles.p_limited, q_set);
    if (d > k)
      throw PreconditionError("vertex " + std::to_string(v) + " in P sends " + std::to_string(d) + " colour-" +
                              std::to_string(roles.p_limited) + " edges into Q (limit k = " + std::to_string(k) + ")");
  }
  for (int w : q_set) {
    const int d = f.degree_into(w, roles.q_limited, p_set);
    if (d > k)
      throw PreconditionError("vertex " + std::to_string(w) + " in Q sends " + std::to_string(d) + " colour-" +
                              std::to_string(roles.q_limited) + " edges into P (limit k = " + std::to_string(k) + ")");
  }
  detail::Recorder rec;
  auto kept = detail::bip31_core(f, detail::sorted({p_set.begin(), p_set.end()}),
                                 detail::sorted({q_set.begin(), q_set.end()}), k, roles, rec);
  return detail::finish(rec, f, std::move(kept), roles.main, k, p + q - 24LL * k);
}

// Bipartite input: part M plays P, part N plays Q. Witness labels are
// 0..m-1 for M and m..m+n-1 for N.
inline ExtractionReport extract_31kbip(const ColouredBipartiteGraph& b, int k, Roles31 roles = {}) {
  detail::require(b.colours() == 3, "31kbip needs a 3-colouring");
  const auto f = detail::embed_bipartite(b, roles.q_limited);
  std::vector<int> p_set(b.left()), q_set(b.right());
  std::iota(p_set.begin(), p_set.end(), 0);
  std::iota(q_set.begin(), q_set.end(), b.left());
  return extract_31kbip(f, p_set, q_set, k, roles);
}

// r >= 3 colours, k >= 2: seed with a Mader subgraph of the majority colour,
// close it up, then run the bipartite Turan extractor on the densest other
// colour across the seed and the rest.
inline ExtractionReport extract_thm_r1k(const ColouredCompleteGraph& f, int k) {
  const long long n = f.order();
  const long long r = f.colours();
  detail::require(r >= 3, "thm r1k needs r >= 3 colours");
  detail::require(k >= 2, "thm r1k needs k >= 2 (use r11 for k = 1)");
  const long long kk = static_cast<long long>(k) * k - k;
  detail::require(n > 11 * kk * (r * r - r), "n > 11(k^2-k)(r^2-r) violated (n = " + std::to_string(n) +
                                                  "): the bound is vacuous");
  detail::require(n > 4LL * k * r, "n > 4kr violated (n = " + std::to_string(n) + ")");
  const long long ell = k - 1;
  const bool extra = n >= 44LL * k * k * r * r;
  long long guarantee = detail::ceil_div(n - 11 * kk * r * (r - 1), r - 1);
  if (extra) guarantee = std::max(guarantee, detail::ceil_div(n - 2LL * k * k * r * (r - 1), r - 1));
  detail::Recorder rec;

  Colour main = 1;
  long long main_edges = -1;
  for (Colour c = 1; c <= r; ++c)
    if (const long long e = f.edge_count(c); e > main_edges) {
      main = c;
      main_edges = e;
    }
  const long long target = std::max<long long>(k, main_edges / (2 * n));
  const auto seed = extract_mader(f.colour_graph(main), static_cast<int>(target));
  auto best = closure_addvtx(f, main, seed.witness.vertices, k);
  Colour best_colour = main;
  rec.step("seed", "colour " + std::to_string(main) + ": Mader subgraph on " +
                       std::to_string(seed.witness.order()) + " vertices, closure " + std::to_string(best.size()));

  const int rounds = extra ? 2 : 1;
  for (int round = 0; round < rounds; ++round) {
    const long long c = static_cast<long long>(best.size());
    rec.stat("c" + std::to_string(round), c);
    if (c * (r - 1) >= n) {
      rec.step("large", "|C| >= n/(r-1)");
      break;
    }
    const auto d_set = detail::complement(static_cast<int>(n), best);
    Colour pick = 0;
    long long pick_edges = -1;
    for (Colour i = 1; i <= r; ++i) {
      if (i == best_colour) continue;
      long long e = 0;
      for (int x : best)
        for (int y : d_set) e += f.colour(x, y) == i;
      if (e > pick_edges) {
        pick = i;
        pick_edges = e;
      }
    }
    const SimpleGraph b = f.bipartite_graph(pick, best, d_set);
    const auto m_local = detail::locals(b, best);
    const auto n_local = detail::locals(b, d_set);
    std::vector<std::pair<std::string, long long>> qs;
    // The sharper q needs |C| > n/(r-1) - 11k^2 r, which the first round
    // delivers.
    if (extra && c * (r - 1) > n - 11LL * k * k * r * (r - 1))
      qs.emplace_back("q2", detail::floor_div(3 * (r - 2) * (n - 2 * ell) - kk * (5 * r * r - 10 * r + 3) * (r - 1),
                                              3 * (r - 1) * (r - 2)));
    qs.emplace_back("q1", detail::floor_div(n - 2 * ell - 10 * kk * r * (r - 1), r - 1));
    BipExtraction got;
    std::string used;
    for (const auto& [name, q] : qs) {
      if (q < 1) continue;
      got = extract_r1kbip(b, m_local, n_local, static_cast<int>(ell), static_cast<int>(q));
      if (got) {
        used = name + " = " + std::to_string(q);
        break;
      }
    }
    rec.check(static_cast<bool>(got), "bipartite Turan extractor refused: " + got.refusal);
    auto grown = closure_addvtx(f, pick, got.report->witness.vertices, k);
    rec.step("r1kbip", "colour " + std::to_string(pick) + ", |C| = " + std::to_string(c) + ", |D| = " +
                           std::to_string(d_set.size()) + ", " + used + ", subgraph " +
                           std::to_string(got.report->witness.order()) + ", closure " + std::to_string(grown.size()));
    if (grown.size() <= best.size()) break;
    best = std::move(grown);
    best_colour = pick;
  }
  return detail::finish(rec, f, best, best_colour, k, guarantee);
}

namespace detail {

struct Found31 {
  std::vector<int> vertices;
  Colour colour = 1;
};

// The proof of the three-colour bound as a search. Returns as soon as some
// monochromatic k-connected set has 2|S| > threshold.
inline Found31 thm31k_search(const ColouredCompleteGraph& f, int k, long long threshold, bool refined, Recorder& rec) {
  const int n = f.order();
  const auto all = f.all_vertices();
  auto big = [&](const std::vector<int>& s) { return 2LL * static_cast<long long>(s.size()) > threshold; };
  auto name = [](const char* base, int i) { return std::string(base) + std::to_string(i); };

  // Claim 1: a cover A_1, A_2, A_3 by maximal k-connected sets.
  std::array<Colour, 3> by_edges{1, 2, 3};
  std::array<long long, 4> edges{};
  for (Colour c = 1; c <= 3; ++c) edges[c] = f.edge_count(c);
  std::stable_sort(by_edges.begin(), by_edges.end(), [&](Colour a, Colour b) { return edges[a] > edges[b]; });
  const Colour c1 = by_edges[0];
  const long long t1 = std::max<long long>(k, ceil_div(n, 12) - 1);
  rec.check(edges[c1] >= 2LL * t1 * n, "majority colour below average degree 4 t1");
  const auto m1 = extract_mader(f.colour_graph(c1), static_cast<int>(t1));
  const auto a1 = closure_addvtx(f, c1, m1.witness.vertices, k);
  rec.step("claim1-A1", "colour " + std::to_string(c1) + ": |A1| = " + std::to_string(a1.size()));
  if (big(a1)) return {a1, c1};
  rec.check(12LL * static_cast<long long>(a1.size()) >= n, "|A1| >= n/12 failed");

  const auto a1c = complement(n, a1);
  auto across = [&](Colour c) {
    long long e = 0;
    for (int x : a1)
      for (int y : a1c) e += f.colour(x, y) == c;
    return e;
  };
  Colour c2 = 0, c3 = 0;
  {
    std::array<Colour, 2> rest{};
    int at = 0;
    for (Colour c = 1; c <= 3; ++c)
      if (c != c1) rest[at++] = c;
    const bool first = across(rest[0]) >= across(rest[1]);
    c2 = first ? rest[0] : rest[1];
    c3 = first ? rest[1] : rest[0];
  }
  const SimpleGraph h2 = f.bipartite_graph(c2, a1, a1c);
  rec.check(30LL * h2.edge_count() > static_cast<long long>(n) * n, "e(H2) > n^2/30 failed");
  const auto m2 = extract_mader(h2, 8 * k);
  rec.check(static_cast<long long>(set_intersection(m2.witness.vertices, a1).size()) >= 8LL * k,
            "Mader subgraph of H2 meets A1 in fewer than 8k vertices");
  const auto a2 = closure_addvtx(f, c2, m2.witness.vertices, k);
  rec.step("claim1-A2", "colour " + std::to_string(c2) + ": |A2| = " + std::to_string(a2.size()));
  if (big(a2)) return {a2, c2};

  const auto x_set = set_intersection(a1, a2);
  const auto y_set = set_minus(all, set_union(a1, a2));
  rec.check(static_cast<long long>(x_set.size()) >= 8LL * k, "|A1 n A2| >= 8k failed");
  std::vector<int> x_kept, u_set;
  for (int v : x_set) (f.degree_into(v, c3, y_set) <= k - 1 ? u_set : x_kept).push_back(v);
  rec.check(static_cast<long long>(u_set.size()) < 3LL * k, "|U| < 3k failed");
  // |A1| + |A2| <= threshold < n, so Y is never empty here.
  rec.check(!y_set.empty(), "A1 u A2 already covers V");
  const SimpleGraph g3 = f.bipartite_graph(c3, x_kept, y_set);
  rec.check(certify_intersect(g3, locals(g3, x_kept), locals(g3, y_set), k),
            "G3[X', Y] fails the intersection condition");
  const auto a3 = closure_addvtx(f, c3, set_union(x_kept, y_set), k);
  rec.step("claim1-A3", "colour " + std::to_string(c3) + ": |A3| = " + std::to_string(a3.size()));
  if (big(a3)) return {a3, c3};
  rec.check(set_union(set_union(a1, a2), a3).size() == static_cast<std::size_t>(n), "A1 u A2 u A3 != V");

  std::array<std::vector<int>, 4> a;  // indexed by colour
  a[c1] = a1;
  a[c2] = a2;
  a[c3] = a3;
  auto others = [](Colour i) {
    std::array<Colour, 2> o{};
    int at = 0;
    for (Colour c = 1; c <= 3; ++c)
      if (c != i) o[at++] = c;
    return o;
  };
  const auto core = set_intersection(set_intersection(a[1], a[2]), a[3]);
  const long long c_all = static_cast<long long>(core.size());
  std::array<long long, 4> a_only{}, b_pair{};
  long long total = c_all;
  for (Colour i = 1; i <= 3; ++i) {
    const auto [j, l] = others(i);
    a_only[i] = static_cast<long long>(set_minus(a[i], set_union(a[j], a[l])).size());
    b_pair[i] = static_cast<long long>(set_minus(set_intersection(a[j], a[l]), a[i]).size());
    total += a_only[i] + b_pair[i];
    rec.stat(name("a", i), a_only[i]);
    rec.stat(name("b", i), b_pair[i]);
  }
  rec.stat("c", c_all);
  rec.check(total == n, "region sizes do not add up to n");
  for (Colour i = 1; i <= 3; ++i)
    rec.check(a_only[i] >= b_pair[i] + c_all + (n - threshold),
              "a_i >= b_i + c + (n - threshold) failed for colour " + std::to_string(i));
  rec.step("regions", "a = (" + std::to_string(a_only[1]) + "," + std::to_string(a_only[2]) + "," +
                          std::to_string(a_only[3]) + "), b = (" + std::to_string(b_pair[1]) + "," +
                          std::to_string(b_pair[2]) + "," + std::to_string(b_pair[3]) + "), c = " +
                          std::to_string(c_all));

  // Orient a pair (j, l) so that the P side is the smaller difference.
  struct Oriented {
    Colour p_owner, q_owner;
    std::vector<int> p, q;
  };
  auto orient = [&](Colour j, Colour l) {
    auto pj = set_minus(a[j], a[l]);
    auto ql = set_minus(a[l], a[j]);
    if (pj.size() <= ql.size()) return Oriented{j, l, std::move(pj), std::move(ql)};
    return Oriented{l, j, std::move(ql), std::move(pj)};
  };
  auto check_sizes = [&](const Oriented& o) {
    const long long p = static_cast<long long>(o.p.size());
    const long long q = static_cast<long long>(o.q.size());
    rec.check(p >= 24LL * k && 3 * p >= q, "difference sets fail 3p >= q >= p >= 24k");
  };

  // Claim 2: a small a_i would already give a big bipartite subgraph.
  for (Colour i = 1; i <= 3; ++i) {
    if (6 * a_only[i] >= n) continue;
    const auto [j, l] = others(i);
    auto o = orient(j, l);
    check_sizes(o);
    auto s = bip31_core(f, o.p, o.q, k, Roles31{i, o.q_owner, o.p_owner}, rec);
    rec.step("claim2", "a" + std::to_string(i) + " < n/6; colour " + std::to_string(i) + " across A" +
                           std::to_string(o.p_owner) + "\\A" + std::to_string(o.q_owner) + " gives " +
                           std::to_string(s.size()));
    rec.check(big(s), "Claim 2 set does not beat the threshold");
    return {s, i};
  }

  // Claim 3: L_l from each pair {i, j}, grown to M_l.
  std::array<std::vector<int>, 4> m_sets;
  for (Colour l = 1; l <= 3; ++l) {
    const auto [i, j] = others(l);
    auto o = orient(i, j);
    check_sizes(o);
    auto lset = bip31_core(f, o.p, o.q, k, Roles31{l, o.q_owner, o.p_owner}, rec);
    rec.step(name("L", l), "|L" + std::to_string(l) + "| = " + std::to_string(lset.size()));
    if (big(lset)) return {lset, l};
    m_sets[l] = closure_addvtx(f, l, lset, k);
    rec.step(name("M", l), "|M" + std::to_string(l) + "| = " + std::to_string(m_sets[l].size()));
    if (big(m_sets[l])) return {m_sets[l], l};
  }

  std::array<std::array<std::vector<int>, 4>, 4> x_sets;
  std::array<long long, 4> z{};
  long long sum = 0;
  for (Colour i = 1; i <= 3; ++i) {
    const auto [j, l] = others(i);
    for (Colour jj : {j, l}) {
      const Colour ll = static_cast<Colour>(6 - i - jj);
      x_sets[i][jj] = set_minus(a[i], set_union(a[jj], m_sets[ll]));
      const long long x = static_cast<long long>(x_sets[i][jj].size());
      rec.stat("x" + std::to_string(i) + std::to_string(jj), x);
      rec.check(x <= 16LL * k, "x_ij <= 16k failed");
      sum += x;
    }
    z[i] = static_cast<long long>(set_minus(m_sets[i], set_union(a[j], a[l])).size());
    rec.stat(name("z", i), z[i]);
    sum -= z[i];
  }
  rec.stat("x_minus_z", sum);
  rec.check(sum >= 3LL * k - (refined ? 3 : 0), "sum x - sum z below the pigeonhole bound");
  for (Colour i = 1; i <= 3; ++i) {
    const auto [j, l] = others(i);
    const long long gain = static_cast<long long>(x_sets[i][j].size() + x_sets[i][l].size()) - z[i];
    if (gain < k) continue;
    rec.check(static_cast<long long>(set_union(x_sets[i][j], x_sets[i][l]).size()) >= k,
              "A_i and M_i share fewer than k vertices");
    auto w = set_union(a[i], m_sets[i]);
    rec.step("claim3", "colour " + std::to_string(i) + ": |A_i u M_i| = " + std::to_string(w.size()));
    rec.check(4LL * static_cast<long long>(w.size()) >= 3LL * n, "|A_i u M_i| >= 3n/4 failed");
    return {w, i};
  }
  rec.check(false, "no colour with x_ij + x_il - z_i >= k");
  return {};
}

}  // namespace detail

// Three colours, n >= 480k: a monochromatic k-connected subgraph on
// ceil((n-k+1)/2) vertices, or (n-k+3)/2 when n+k = 3 mod 4.
inline ExtractionReport extract_thm31k(const ColouredCompleteGraph& f, int k) {
  detail::require(f.colours() == 3, "thm31k needs exactly 3 colours");
  detail::require(k >= 1, "k must be at least 1");
  const long long n = f.order();
  detail::require(n >= 480LL * k,
                  "n >= 480k violated (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  const bool refined = (n + k) % 4 == 3;
  const long long threshold = refined ? n - k + 1 : n - k;
  detail::Recorder rec;
  rec.stat("threshold", threshold);
  auto found = detail::thm31k_search(f, k, threshold, refined, rec);
  return detail::finish(rec, f, std::move(found.vertices), found.colour, k, threshold / 2 + 1);
}

}  // namespace monoconn
