#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "monoconn/constructions.hpp"
#include "monoconn/field.hpp"

namespace monoconn {

struct BoundEntry {
  long long value = 0;
  std::string source;
};

// Closed-form bounds on m(n, r, 1, k), the order of the largest monochromatic
// k-connected subgraph guaranteed in every r-colouring of K_n.
struct BoundsRow {
  long long n = 0;
  long long r = 0;
  long long s = 1;
  long long k = 0;
  BoundEntry lower;  // sharpest proven lower bound
  BoundEntry upper;  // sharpest proven upper bound
  std::optional<BoundEntry> conjectured;
  std::vector<BoundEntry> lower_candidates;  // every applicable proven bound
  std::vector<BoundEntry> upper_candidates;
  std::vector<std::string> notes;

  bool exact() const { return lower.value == upper.value; }
};

namespace detail {

inline long long ceil_ratio(long long num, long long den) { return ceil_div(num, den); }

}  // namespace detail

inline BoundsRow theorem_bounds(long long n, long long r, long long k) {
  detail::require(n >= 2, "n must be at least 2");
  detail::require(r >= 1, "r must be at least 1");
  detail::require(k >= 1, "k must be at least 1");
  BoundsRow row;
  row.n = n;
  row.r = r;
  row.k = k;
  auto& lo = row.lower_candidates;
  auto& up = row.upper_candidates;

  lo.push_back({0, "trivial"});
  if (n <= k) {
    up.push_back({0, "fewer than k+1 vertices: no k-connected subgraph exists"});
  } else {
    up.push_back({n, "trivial: whole vertex set"});
  }

  if (r == 1 && n >= k + 1) lo.push_back({n, "one colour: K_n is (n-1)-connected"});

  if (r == 2) {
    if (k == 1) lo.push_back({n, "two colours, k=1: a graph or its complement is connected"});
    if (k == 2 && n >= 5) lo.push_back({n - 2, "two colours, k=2: m(n,2,1,2) = n-2 for n >= 5"});
    if (k == 3 && n >= 9) lo.push_back({n - 4, "two colours, k=3: m(n,2,1,3) = n-4 for n >= 9"});
    if (n >= 13 * k - 15) lo.push_back({n - 2 * k + 2, "two colours: m(n,2,1,k) = n-2k+2 for n >= 13k-15"});
    const long long slack = n - 9 * k;
    if (k >= 18 && slack >= 0 && slack * slack >= 10 * k * k)
      lo.push_back({n - 2 * k + 2, "two colours, refined threshold: m(n,2,1,k) = n-2k+2 for n >= (9+sqrt10)k, k >= 18"});
    if (n >= 4 * k - 3) up.push_back({n - 2 * k + 2, "four-block two-colouring: m(n,2,1,k) <= n-2k+2 for n >= 4k-3"});
  }

  if (r >= 2 && k == 1) lo.push_back({detail::ceil_ratio(n, r - 1), "components: m(n,r,1,1) >= n/(r-1)"});

  if (r >= 3 && k >= 2 && n > 11 * (k * k - k) * (r * r - r))
    lo.push_back({detail::ceil_ratio(n - 11 * (k * k - k) * r * (r - 1), r - 1),
                  "general r: m(n,r,1,k) >= n/(r-1) - 11(k^2-k)r for n > 11(k^2-k)(r^2-r)"});
  if (r >= 3 && n >= 44 * k * k * r * r)
    lo.push_back({detail::ceil_ratio(n - 2 * k * k * r * (r - 1), r - 1),
                  "general r, large n: m(n,r,1,k) >= n/(r-1) - 2k^2 r for n >= 44k^2 r^2"});

  if (r == 3 && n >= 480 * k) {
    const long long residue = (n + k) % 4;
    const long long exact = residue == 1 ? (n - k + 1) / 2 : residue == 3 ? (n - k + 3) / 2 : (n - k + 2) / 2;
    lo.push_back({exact, "three colours: exact value by (n+k) mod 4 for n >= 480k"});
    up.push_back({exact, "three colours: exact value by (n+k) mod 4 for n >= 480k"});
  }

  if (r >= 2 && k >= 2 && n <= 2 * r * (k - 1)) up.push_back({0, "Hamilton-path blocks: m(n,r,1,k) = 0 for n <= 2r(k-1)"});

  if (r >= 3 && is_prime_power(static_cast<int>(r - 1)) && n >= r * (k - 1))
    up.push_back({affine_claimed_bound(n, r, k),
                  "affine plane colouring: (r-1)*ceil((n-r(k-1))/(r-1)^2) + k-1"});
  if (r == 3 && n > k) up.push_back({detail::floor_div(n - k + 3, 2), "three colours: m(n,3,1,k) <= (n-k+3)/2"});

  if (r == 2 && n >= 4 * k - 3)
    row.conjectured = BoundEntry{n - 2 * k + 2, "conjecture: m(n,2,1,k) = n-2k+2 for n >= 4k-3"};
  if (r == 3 && n >= 6 * k - 5)
    row.conjectured = BoundEntry{detail::ceil_ratio(n - k + 1, 2), "conjecture: m(n,3,1,k) >= (n-k+1)/2 for n >= 6k-5"};
  if (r >= 3 && is_prime_power(static_cast<int>(r - 1)) && n >= 2 * r * (k - 1) + 1 &&
      (n - r * (k - 1)) % ((r - 1) * (r - 1)) == 0)
    row.conjectured = BoundEntry{(n - k + 1) / (r - 1), "conjecture: m(n,r,1,k) = (n-k+1)/(r-1)"};

  if (r >= 3 && !is_prime_power(static_cast<int>(r - 1))) {
    long long rp = r;
    while (rp >= 3 && !is_prime_power(static_cast<int>(rp - 1))) --rp;
    row.notes.push_back("r-1 is not a prime power: asymptotically m(n,r,1,k) <= n/(r'-1) + o(n) with r' = " +
                        std::to_string(rp));
  }

  row.lower = *std::max_element(lo.begin(), lo.end(),
                                [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
  row.upper = *std::min_element(up.begin(), up.end(),
                                [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
  detail::ensure(row.lower.value <= row.upper.value, "bounds table is inconsistent at n=" + std::to_string(n) +
                                                         " r=" + std::to_string(r) + " k=" + std::to_string(k));
  return row;
}

}  // namespace monoconn
