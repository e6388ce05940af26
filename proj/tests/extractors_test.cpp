#include <gtest/gtest.h>

#include <random>

#include "monoconn/constructions.hpp"
#include "monoconn/extractors.hpp"
#include "monoconn/oracle.hpp"
#include "test_support.hpp"

namespace monoconn {
namespace {

using testing::random_bipartite;
using testing::random_colouring;
using testing::random_graph;
using testing::range;

ColouredCompleteGraph biased_two_colouring(int n, double red, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(red);
  return ColouredCompleteGraph::from_function(n, 2, [&](int, int) { return coin(rng) ? 1 : 2; });
}

// Independent check: the witness is one colour and k-connected in that colour.
void expect_sound(const ColouredCompleteGraph& f, const ExtractionReport& rep) {
  ASSERT_EQ(rep.witness.colours.size(), 1U);
  EXPECT_TRUE(is_k_connected(f.colour_graph(rep.witness.colours[0], rep.witness.vertices), rep.witness.k).connected);
  EXPECT_GE(rep.witness.order(), rep.guarantee);
}

int min_degree(const ColouredCompleteGraph& f, Colour c) {
  int best = f.order();
  const auto all = f.all_vertices();
  for (int v = 0; v < f.order(); ++v) best = std::min(best, f.degree_into(v, c, all));
  return best;
}

TEST(ExtractDegs, AllRed) {
  ColouredCompleteGraph f(10, 2, 1);
  auto rep = extract_degs(f, 3);
  EXPECT_EQ(rep.witness.order(), 10);
  EXPECT_EQ(rep.witness.colours, std::vector<Colour>{1});
  EXPECT_TRUE(rep.took("degs-main"));
}

TEST(ExtractDegs, TwoRedCliques) {
  auto f = ColouredCompleteGraph::from_function(12, 2, [](int u, int v) { return (u < 6) == (v < 6) ? 1 : 2; });
  auto rep = extract_degs(f, 1);
  EXPECT_EQ(rep.witness.order(), 12);
  EXPECT_EQ(rep.witness.colours, std::vector<Colour>{2});
  EXPECT_TRUE(rep.took("degs-other"));
}

TEST(ExtractDegs, RandomWithHighRedDegree) {
  int blue_branch = 0;
  int done = 0;
  for (std::uint64_t seed = 1; done < 100; ++seed) {
    // Sparse red half the time so that both branches show up.
    auto f = biased_two_colouring(30, seed % 2 ? 0.5 : 0.18, seed);
    if (min_degree(f, 1) < 4) {
      EXPECT_THROW(extract_degs(f, 3), PreconditionError);
      continue;
    }
    ++done;
    auto rep = extract_degs(f, 3);
    expect_sound(f, rep);
    EXPECT_GE(rep.witness.order(), 28);
    blue_branch += rep.took("degs-other");
  }
  // Planted: red is two K_15, every red degree 14, blue is K_{15,15}.
  auto f = ColouredCompleteGraph::from_function(30, 2, [](int u, int v) { return (u < 15) == (v < 15) ? 1 : 2; });
  auto rep = extract_degs(f, 3);
  expect_sound(f, rep);
  EXPECT_EQ(rep.witness.order(), 30);
  EXPECT_TRUE(rep.took("degs-other") || blue_branch > 0);
}

TEST(ExtractDegs, NamesViolatingVertex) {
  ColouredCompleteGraph f(8, 2, 1);
  for (int v = 1; v < 8; ++v) f.set_colour(0, v, 2);
  try {
    extract_degs(f, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 0"), std::string::npos);
  }
}

TEST(ExtractThm21k, AllRed) {
  ColouredCompleteGraph f(24, 2, 1);
  auto rep = extract_thm21k(f, 3);
  EXPECT_EQ(rep.witness.order(), 24);
}

TEST(ExtractThm21k, ExtremalColouring) {
  auto rep_bg = construct_bg(40, 4);
  const auto& f = *rep_bg.colouring;
  auto rep = extract_thm21k(f, 4);
  expect_sound(f, rep);
  EXPECT_GE(rep.witness.order(), 34);
  EXPECT_TRUE(rep.has_stat("p"));
  // Nothing larger exists: the construction's own bound.
  EXPECT_EQ(rep_bg.claimed_bound, 34);
  EXPECT_EQ(rep.witness.order(), 34);
}

TEST(ExtractThm21k, ExtremalColouringMatchesOracleAtSmallN) {
  for (int n = 11; n <= 14; ++n) {
    auto bg = construct_bg(n, 2);
    auto rep = extract_thm21k(*bg.colouring, 2);
    expect_sound(*bg.colouring, rep);
    EXPECT_EQ(rep.witness.order(), exact_M(*bg.colouring, 2, 1).M) << n;
  }
}

TEST(ExtractThm21k, RandomInternals) {
  std::map<std::string, int> seen;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const double red = std::array<double, 4>{0.5, 0.08, 0.92, 0.15}[seed % 4];
    auto f = biased_two_colouring(50, red, seed);
    if (seed % 3 == 0) {
      // One vertex with no blue and one with no red, so both colours have a
      // low-degree vertex and the peeling runs.
      for (int v = 1; v < 50; ++v) f.set_colour(0, v, 1);
      for (int v = 2; v < 50; ++v) f.set_colour(1, v, 2);
    }
    auto rep = extract_thm21k(f, 5);
    expect_sound(f, rep);
    EXPECT_GE(rep.witness.order(), 42);
    if (rep.has_stat("p")) {
      EXPECT_LE(std::min(rep.stat("p"), rep.stat("q")), 8 * 5 - 11);
    }
    if (rep.has_stat("U")) {
      EXPECT_LE(rep.stat("U"), 2 * 5 - 2);
      EXPECT_GE(rep.stat("M"), 3 * 5 - 2);
    }
    for (const auto& t : rep.trace) ++seen[t.name];
  }
  EXPECT_GT(seen["degs"], 0);
  EXPECT_GT(seen["peel"], 0);
}

TEST(ExtractThm21k, ResidualCutHandsOverToOtherColour) {
  // x = 0 is all blue, c = 1 is all red apart from x, red is two cliques
  // A = 2..6, B = 7..11 meeting only in c. Peeling gives X = {x}, Y = {c};
  // red on V - x has the cut {c}, so blue on V - c takes over.
  auto f = ColouredCompleteGraph::from_function(12, 2, [](int u, int v) {
    if (u == 0) return 2;
    if (u == 1) return 1;
    return (u < 7) == (v < 7) ? 1 : 2;
  });
  auto rep = extract_thm21k(f, 2);
  expect_sound(f, rep);
  EXPECT_TRUE(rep.took("residual-other"));
  EXPECT_EQ(rep.stat("p"), 1);
  EXPECT_EQ(rep.stat("q"), 1);
  EXPECT_EQ(rep.witness.colours, std::vector<Colour>{2});
  EXPECT_EQ(rep.witness.order(), 11);
}

TEST(ExtractThm21k, LargeNUsesIntersectionCertificate) {
  // k = 5, n = 50. N = 0..8 is red-poor, Y = 9..17 is blue-poor, R = 18..49
  // is a red clique. Each Y vertex sends 6 blue and 3 red edges into N, R
  // vertex 18 sends only 4 blue edges into N and so lands in U.
  const int k = 5;
  auto f = ColouredCompleteGraph::from_function(50, 2, [](int u, int v) {
    const bool un = u < 9, vn = v < 9;
    if (un && vn) return 2;
    if (!un && !vn) return 1;
    const int nv = un ? u : v;
    const int other = un ? v : u;
    if (other < 18) {
      const int i = other - 9;
      return (nv - i + 9) % 9 < 3 ? 1 : 2;
    }
    if (other == 18) return nv < 5 ? 1 : 2;
    return 2;
  });
  auto rep = extract_thm21k(f, k);
  expect_sound(f, rep);
  EXPECT_TRUE(rep.took("strip-U"));
  EXPECT_TRUE(rep.took("intersect"));
  EXPECT_EQ(rep.stat("p"), 9);
  EXPECT_EQ(rep.stat("q"), 10);  // vertex 18 has blue degree 4 and is peeled too
  EXPECT_EQ(rep.stat("N"), 9);
  EXPECT_EQ(rep.stat("U"), 1);
  EXPECT_EQ(rep.witness.colours, std::vector<Colour>{2});
  EXPECT_EQ(rep.witness.order(), 49);
}

TEST(ExtractThm21k, Threshold) {
  EXPECT_THROW(extract_thm21k(ColouredCompleteGraph(49, 2), 5), PreconditionError);
  EXPECT_THROW(extract_thm21k(ColouredCompleteGraph(300, 2), 17, true), PreconditionError);
  // (9+sqrt10)k at k = 18 is 218.9.
  EXPECT_THROW(extract_thm21k(ColouredCompleteGraph(218, 2), 18, true), PreconditionError);
  auto rep = extract_thm21k(random_colouring(219, 2, 7), 18, true);
  expect_sound(random_colouring(219, 2, 7), rep);
}

TEST(ExtractMader, CliqueFive) {
  SimpleGraph g = SimpleGraph::with_order(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  auto rep = extract_mader(g, 1);
  EXPECT_EQ(rep.witness.order(), 5);
}

TEST(ExtractMader, TwoCliques) {
  SimpleGraph g = SimpleGraph::with_order(26);
  for (int u = 0; u < 26; ++u)
    for (int v = u + 1; v < 26; ++v)
      if ((u < 13) == (v < 13)) g.add_edge(u, v);
  auto rep = extract_mader(g, 3);
  EXPECT_EQ(rep.witness.order(), 13);
  EXPECT_GE(vertex_connectivity(g.induced_by_labels(rep.witness.vertices)).kappa, 3);
}

TEST(ExtractMader, RandomGraphs) {
  int done = 0;
  for (std::uint64_t seed = 1; done < 100; ++seed) {
    auto g = random_graph(80, 0.12 + 0.02 * static_cast<double>(seed % 5), seed);
    if (2 * g.edge_count() < 4LL * 3 * 80) {
      EXPECT_THROW(extract_mader(g, 3), PreconditionError);
      continue;
    }
    ++done;
    auto rep = extract_mader(g, 3);
    EXPECT_TRUE(is_k_connected(g.induced_by_labels(rep.witness.vertices), 3).connected);
  }
}

TEST(ExtractMader, PlantedCutsForceSplits) {
  // Three K_14 chained by two vertices: not 3-connected as a whole.
  SimpleGraph g = SimpleGraph::with_order(42);
  for (int u = 0; u < 42; ++u)
    for (int v = u + 1; v < 42; ++v)
      if (u / 14 == v / 14) g.add_edge(u, v);
  g.add_edge(13, 14);
  g.add_edge(27, 28);
  auto rep = extract_mader(g, 3);
  EXPECT_EQ(rep.witness.order(), 14);
  EXPECT_GE(rep.stat("splits"), 1);
}

TEST(ExtractBipComponent, CompleteBipartite) {
  auto g = random_bipartite(4, 6, 1.0, 1);
  auto rep = extract_bip_component(g, range(0, 4), range(4, 10));
  EXPECT_EQ(rep.witness.order(), 10);
}

TEST(ExtractBipComponent, ModularColouring) {
  auto bip = construct_bipartite_modular(6, 6, 3);
  Colour densest = 1;
  long long best = -1;
  for (Colour c = 1; c <= 3; ++c)
    if (bip.bipartite->colour_graph(c).edge_count() > best) {
      best = bip.bipartite->colour_graph(c).edge_count();
      densest = c;
    }
  auto rep = extract_bip_component(bip.bipartite->colour_graph(densest), range(0, 6), range(6, 12));
  EXPECT_GE(rep.witness.order(), 4);
}

TEST(ExtractBipComponent, DensityInequality) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int m = 3 + static_cast<int>(seed % 9);
    const int n = 2 + static_cast<int>(seed % 13);
    auto g = random_bipartite(m, n, 0.05 + 0.01 * static_cast<double>(seed % 30), seed);
    if (g.edge_count() == 0) {
      EXPECT_THROW(extract_bip_component(g, range(0, m), range(m, m + n)), PreconditionError);
      continue;
    }
    auto rep = extract_bip_component(g, range(0, m), range(m, m + n));
    EXPECT_GE(static_cast<long long>(rep.witness.order()) * m * n, g.edge_count() * (m + n));
    EXPECT_TRUE(is_k_connected(g.induced_by_labels(rep.witness.vertices), 1).connected);
  }
}

TEST(ExtractR11, TwoColouringSpans) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto f = random_colouring(25, 2, seed);
    auto rep = extract_r11(f);
    EXPECT_EQ(rep.witness.order(), 25);
  }
}

TEST(ExtractR11, AffineSixteen) {
  auto aff = construct_affine(16, 3, 1);
  auto rep = extract_r11(*aff.colouring);
  expect_sound(*aff.colouring, rep);
  EXPECT_EQ(rep.witness.order(), 8);
}

TEST(ExtractR11, RandomFourColourings) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    // Sparse colour 1 so the bipartite branch is exercised.
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> pick({0.02, 0.33, 0.33, 0.32});
    auto f = seed % 2 ? random_colouring(30, 4, seed)
                      : ColouredCompleteGraph::from_function(30, 4, [&](int, int) { return pick(rng) + 1; });
    auto rep = extract_r11(f);
    expect_sound(f, rep);
    EXPECT_GE(rep.witness.order(), 10);
  }
}

TEST(ExtractR1kbip, CompleteBipartite) {
  auto g = random_bipartite(10, 10, 1.0, 1);
  auto out = extract_r1kbip(g, range(0, 10), range(10, 20), 1, 8);
  ASSERT_TRUE(out);
  EXPECT_EQ(out.report->witness.order(), 20);
  EXPECT_EQ(out.report->stat("depth"), 0);
}

TEST(ExtractR1kbip, RefusesBelowBound) {
  auto g = random_bipartite(10, 10, 0.3, 1);
  auto out = extract_r1kbip(g, range(0, 10), range(10, 20), 1, 8);
  EXPECT_FALSE(out);
  EXPECT_FALSE(out.refusal.empty());
  EXPECT_THROW(extract_r1kbip(g, range(0, 10), range(10, 20), 11, 8), PreconditionError);
}

TEST(ExtractR1kbip, RandomOverAndUnderBound) {
  int over = 0, under = 0;
  for (std::uint64_t seed = 1; over < 100 || under < 100; ++seed) {
    const double p = seed % 2 ? 0.62 : 0.45;
    auto g = random_bipartite(40, 40, p, seed);
    const bool exceeds = detail::exceeds_turan(g.edge_count(), 40, 40, 2, 20);
    auto out = extract_r1kbip(g, range(0, 40), range(40, 80), 2, 20);
    ASSERT_EQ(static_cast<bool>(out), exceeds);
    if (exceeds) {
      ++over;
      EXPECT_GE(out.report->witness.order(), 20);
      EXPECT_TRUE(is_k_connected(g.induced_by_labels(out.report->witness.vertices), 3).connected);
      EXPECT_LE(out.report->stat("depth"), 80);
    } else {
      ++under;
    }
  }
}

TEST(ExtractR1kbip, RecursionShrinks) {
  // Two dense bipartite blocks joined by one edge: the extractor must cut.
  SimpleGraph g = SimpleGraph::with_order(60);
  for (int u = 0; u < 30; ++u)
    for (int v = 30; v < 60; ++v)
      if ((u < 15) == (v < 45)) g.add_edge(u, v);
  g.add_edge(14, 45);
  auto out = extract_r1kbip(g, range(0, 30), range(30, 60), 1, 10);
  ASSERT_TRUE(out);
  EXPECT_GE(out.report->stat("depth"), 1);
  EXPECT_LE(out.report->stat("depth"), 60);
  EXPECT_TRUE(is_k_connected(g.induced_by_labels(out.report->witness.vertices), 2).connected);
}

TEST(LemmaArithmetic, RandomQuadruples) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long long> pick(1, 1000000);
  for (int i = 0; i < 100000; ++i) {
    const __int128 a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    // ab/(a+b) + cd/(c+d) <= (a+c)(b+d)/(a+b+c+d), cleared of denominators.
    const __int128 lhs = (a * b * (c + d) + c * d * (a + b)) * (a + b + c + d);
    const __int128 rhs = (a + c) * (b + d) * (a + b) * (c + d);
    ASSERT_LE(lhs, rhs);
  }
}

TEST(Extract31kbip, AllMainColour) {
  ColouredBipartiteGraph b(24, 24, 3, 1);
  auto rep = extract_31kbip(b, 1);
  EXPECT_EQ(rep.witness.order(), 48);
}

TEST(Extract31kbip, FewLimitedEdges) {
  ColouredBipartiteGraph b(48, 48, 3, 1);
  for (int i = 0; i < 48; ++i) {
    b.set_colour(i, i, 3);
    b.set_colour(i, (i + 1) % 48, 3);
  }
  auto rep = extract_31kbip(b, 2);
  EXPECT_GE(rep.witness.order(), 48);
  EXPECT_LE(rep.stat("S_P"), 16);
  EXPECT_LE(rep.stat("S_Q"), 32);
  auto f = detail::embed_bipartite(b, 2);
  expect_sound(f, rep);
}

TEST(Extract31kbip, Preconditions) {
  EXPECT_THROW(extract_31kbip(ColouredBipartiteGraph(24, 73, 3, 1), 1), PreconditionError);
  EXPECT_THROW(extract_31kbip(ColouredBipartiteGraph(23, 30, 3, 1), 1), PreconditionError);
  ColouredBipartiteGraph b(24, 24, 3, 1);
  b.set_colour(5, 0, 3);
  b.set_colour(5, 1, 3);
  try {
    extract_31kbip(b, 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 5"), std::string::npos);
  }
}

TEST(ExtractThmR1k, SingleColour) {
  ColouredCompleteGraph f(200, 3, 1);
  auto rep = extract_thm_r1k(f, 2);
  EXPECT_EQ(rep.witness.order(), 200);
}

TEST(ExtractThmR1k, RandomThreeColourings) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto f = random_colouring(200, 3, seed);
    auto rep = extract_thm_r1k(f, 2);
    EXPECT_EQ(rep.guarantee, 34);
    expect_sound(f, rep);
  }
}

TEST(ExtractThmR1k, AffineColouring) {
  auto aff = construct_affine(200, 3, 2);
  auto rep = extract_thm_r1k(*aff.colouring, 2);
  expect_sound(*aff.colouring, rep);
  EXPECT_GE(rep.witness.order(), 34);
  EXPECT_LE(rep.witness.order(), aff.claimed_bound);
}

TEST(ExtractThmR1k, PlantedSmallSeedUsesBipartiteStep) {
  // Colour 1 is a clique on 60 vertices; the rest is split between 2 and 3
  // so the seed is small and the bipartite step has to do the work.
  auto f = ColouredCompleteGraph::from_function(200, 3, [](int u, int v) {
    if (u < 60 && v < 60) return 1;
    return (u + v) % 2 ? 2 : 3;
  });
  auto rep = extract_thm_r1k(f, 2);
  expect_sound(f, rep);
}

TEST(ExtractThmR1k, VacuousRange) {
  EXPECT_THROW(extract_thm_r1k(ColouredCompleteGraph(132, 3), 2), PreconditionError);
  EXPECT_THROW(extract_thm_r1k(ColouredCompleteGraph(200, 2), 2), PreconditionError);
  EXPECT_THROW(extract_thm_r1k(ColouredCompleteGraph(200, 3), 1), PreconditionError);
}

TEST(ExtractThm31k, SingleColour) {
  ColouredCompleteGraph f(480, 3, 2);
  auto rep = extract_thm31k(f, 1);
  EXPECT_EQ(rep.witness.order(), 480);
  EXPECT_EQ(rep.guarantee, 240);
}

TEST(ExtractThm31k, RandomColourings) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto f = random_colouring(480, 3, seed);
    auto rep = extract_thm31k(f, 1);
    expect_sound(f, rep);
    EXPECT_GE(rep.witness.order(), 240);
  }
}

TEST(ExtractThm31k, AffineColourings) {
  {
    auto aff = construct_affine(482, 3, 1);
    auto rep = extract_thm31k(*aff.colouring, 1);
    expect_sound(*aff.colouring, rep);
    EXPECT_EQ(rep.guarantee, 242);  // 482 + 1 = 3 mod 4
    EXPECT_LE(rep.witness.order(), aff.claimed_bound);
  }
  {
    auto aff = construct_affine(962, 3, 2);
    auto rep = extract_thm31k(*aff.colouring, 2);
    expect_sound(*aff.colouring, rep);
    EXPECT_EQ(rep.guarantee, 481);
    EXPECT_EQ(rep.witness.order(), 481);
    EXPECT_EQ(aff.claimed_bound, 481);
  }
}

TEST(ExtractThm31k, Threshold) {
  try {
    extract_thm31k(ColouredCompleteGraph(479, 3), 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 480k violated"), std::string::npos);
  }
}

TEST(Extractors, Deterministic) {
  auto f = random_colouring(200, 3, 99);
  auto a = extract_thm_r1k(f, 2);
  auto b = extract_thm_r1k(f, 2);
  EXPECT_EQ(a.witness, b.witness);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].name, b.trace[i].name);
    EXPECT_EQ(a.trace[i].detail, b.trace[i].detail);
  }
  auto g = construct_bg(40, 4);
  EXPECT_EQ(extract_thm21k(*g.colouring, 4).witness, extract_thm21k(*g.colouring, 4).witness);
}

}  // namespace
}  // namespace monoconn
