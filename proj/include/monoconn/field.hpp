#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoconn/errors.hpp"

namespace monoconn {

struct PrimePower {
  int prime = 0;
  int exponent = 0;
};

// Trial factorisation; the orders used here are tiny.
inline std::optional<PrimePower> as_prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, m};
}

inline bool is_prime_power(int q) { return as_prime_power(q).has_value(); }

// GF(p^m) with elements encoded as integers 0..q-1: the base-p digits of the
// code are the coefficients of the residue polynomial, lowest degree first.
class FiniteField {
 public:
  // Order q must be a prime power; the modulus is the smallest monic
  // irreducible of degree m, comparing (c_{m-1}, ..., c_0) lexicographically.
  explicit FiniteField(int q) : q_(q) {
    auto pp = as_prime_power(q);
    if (!pp) throw UnsupportedOrderError(std::to_string(q) + " is not a prime power");
    detail::require(q <= 4096, "field order too large for table arithmetic");
    p_ = pp->prime;
    m_ = pp->exponent;
    modulus_ = smallest_irreducible(p_, m_);
    build_tables();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }
  // Monic modulus coefficients c_0..c_m.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    detail::require(a != 0, "zero has no multiplicative inverse");
    return inv_[a];
  }

  std::vector<int> coefficients(int a) const {
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
    return c;
  }

  int encode(const std::vector<int>& c) const {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  }

 private:
  using Poly = std::vector<int>;  // coefficients mod p, lowest degree first

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static int inverse_mod_prime(int a, int p) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw InvariantError("no inverse modulo prime");
  }

  // Remainder of a divided by b over Z_p (b non-zero).
  static Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = inverse_mod_prime(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
      const int shift = static_cast<int>(a.size()) - 1 - db;
      const int factor = a.back() * lead_inv % p;
      for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
      trim(a);
    }
    return a;
  }

  // Monic polynomial of degree d whose lower coefficients are the base-p
  // digits of `code` (c_0 least significant).
  static Poly monic_from_code(int code, int d, int p) {
    Poly poly(d + 1, 0);
    for (int i = 0; i < d; ++i, code /= p) poly[i] = code % p;
    poly[d] = 1;
    return poly;
  }

  static bool irreducible(const Poly& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
      int count = 1;
      for (int i = 0; i < e; ++i) count *= p;
      for (int code = 0; code < count; ++code)
        if (poly_mod(f, monic_from_code(code, e, p), p).empty()) return false;
    }
    return true;
  }

  static Poly smallest_irreducible(int p, int m) {
    if (m == 1) return {0, 1};
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    // Codes increase with (c_{m-1}, ..., c_0) read lexicographically.
    for (int code = 0; code < count; ++code) {
      Poly f = monic_from_code(code, m, p);
      if (irreducible(f, p)) return f;
    }
    throw InvariantError("no irreducible polynomial found");
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      const auto ca = coefficients(a);
      for (int b = 0; b < q_; ++b) {
        const auto cb = coefficients(b);
        std::vector<int> s(m_);
        for (int i = 0; i < m_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = encode(s);
        Poly prod(2 * m_, 0);
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        Poly rem = poly_mod(prod, modulus_, p_);
        rem.resize(m_, 0);
        mul_[a * q_ + b] = encode(rem);
      }
    }
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = b;
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
      }
  }

  int q_;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace monoconn
