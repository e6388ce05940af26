#include <gtest/gtest.h>

#include <random>
#include <set>
#include <utility>

#include "monoconn/affine_plane.hpp"
#include "monoconn/field.hpp"
#include "monoconn/hamilton.hpp"

namespace monoconn {
namespace {

TEST(FiniteField, PrimeOrderIsIntegersModP) {
  FiniteField f(5);
  EXPECT_EQ(f.characteristic(), 5);
  EXPECT_EQ(f.degree(), 1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 5);
      EXPECT_EQ(f.mul(a, b), (a * b) % 5);
    }
}

TEST(FiniteField, OrderFourUsesXSquaredPlusXPlusOne) {
  FiniteField f(4);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 1, 1}));
  // x * x = x + 1, i.e. code 2 * 2 = 3.
  EXPECT_EQ(f.mul(2, 2), 3);
}

TEST(FiniteField, OrderNineUsesSmallestIrreducible) {
  FiniteField f(9);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 0, 1}));  // x^2 + 1
}

TEST(FiniteField, NonPrimePowerIsUnsupported) {
  EXPECT_THROW(FiniteField(6), UnsupportedOrderError);
  EXPECT_THROW(FiniteField(1), UnsupportedOrderError);
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_TRUE(is_prime_power(32));
}

TEST(FiniteField, AxiomsHoldForAllSmallOrders) {
  std::mt19937 rng(7);
  for (int q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    FiniteField f(q);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << "q=" << q;
    }
    for (int a = 1; a < q; ++a) ASSERT_EQ(f.mul(a, f.inv(a)), 1) << "q=" << q << " a=" << a;
    for (int a = 0; a < q; ++a) ASSERT_EQ(f.add(a, f.neg(a)), 0);
  }
}

TEST(AffinePlane, SmallOrderCounts) {
  AffinePlane two(2);
  EXPECT_EQ(two.point_count(), 4);
  EXPECT_EQ(two.class_count(), 3);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(two.parallel_class(c).size(), 2U);

  AffinePlane three(3);
  EXPECT_EQ(three.point_count(), 9);
  EXPECT_EQ(three.class_count(), 4);
  for (int c = 0; c < 4; ++c)
    for (const auto& line : three.parallel_class(c)) EXPECT_EQ(line.size(), 3U);
}

TEST(AffinePlane, OrderFourPairsLieOnExactlyOneLine) {
  AffinePlane plane(4);
  int pairs = 0;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      ++pairs;
      int shared = 0;
      for (int c = 0; c < plane.class_count(); ++c) shared += plane.line_of(c, a) == plane.line_of(c, b);
      EXPECT_EQ(shared, 1);
    }
  EXPECT_EQ(pairs, 120);
}

TEST(AffinePlane, AxiomsForAllOrdersUpToNine) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    AffinePlane plane(q);
    ASSERT_EQ(plane.class_count(), q + 1);
    for (int c = 0; c <= q; ++c) {
      std::vector<int> seen(q * q, 0);
      for (const auto& line : plane.parallel_class(c)) {
        ASSERT_EQ(static_cast<int>(line.size()), q);
        for (int p : line) ++seen[p];
      }
      for (int s : seen) ASSERT_EQ(s, 1) << "class " << c << " of AG(2," << q << ") is not a partition";
    }
    for (int a = 0; a < q * q; ++a)
      for (int b = a + 1; b < q * q; ++b) {
        int shared = 0;
        for (int c = 0; c <= q; ++c) shared += plane.line_of(c, a) == plane.line_of(c, b);
        ASSERT_EQ(shared, 1) << "q=" << q;
      }
    // Lines of different classes meet in exactly one point.
    for (int c1 = 0; c1 <= q; ++c1)
      for (int c2 = c1 + 1; c2 <= q; ++c2) {
        const auto& l1 = plane.line(c1, 0);
        const auto& l2 = plane.line(c2, q - 1);
        int common = 0;
        for (int p : l1) common += std::count(l2.begin(), l2.end(), p);
        ASSERT_EQ(common, 1);
      }
  }
}

void check_decomposition(int r) {
  auto d = decompose_hamilton_paths(r);
  const int n = 2 * r;
  ASSERT_EQ(d.order, n);
  ASSERT_EQ(static_cast<int>(d.paths.size()), r);
  std::set<std::pair<int, int>> edges;
  std::vector<int> ends(n, 0);
  for (const auto& path : d.paths) {
    ASSERT_EQ(static_cast<int>(path.size()), n);
    ASSERT_EQ(std::set<int>(path.begin(), path.end()).size(), static_cast<std::size_t>(n));
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      auto e = std::minmax(path[s], path[s + 1]);
      ASSERT_TRUE(edges.insert(e).second) << "edge repeated for r=" << r;
    }
    ++ends[path.front()];
    ++ends[path.back()];
  }
  EXPECT_EQ(static_cast<int>(edges.size()), r * (2 * r - 1));
  for (int e : ends) EXPECT_EQ(e, 1);
}

TEST(HamiltonPaths, SingleEdgeForROne) {
  auto d = decompose_hamilton_paths(1);
  ASSERT_EQ(d.paths.size(), 1U);
  EXPECT_EQ(d.paths[0], (std::vector<int>{0, 1}));
}

TEST(HamiltonPaths, ThreePathsCoverKSix) { check_decomposition(3); }

TEST(HamiltonPaths, InvariantsUpToTwenty) {
  for (int r = 1; r <= 20; ++r) check_decomposition(r);
}

}  // namespace
}  // namespace monoconn
