#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "omsep/bits.hpp"

namespace omsep {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '0'; }

// Partial order on signs: 0 below both + and -, which are incomparable.
inline bool sign_leq(Sign a, Sign b) { return a == Sign::Zero || a == b; }

struct SignedSet {
  Bits plus = 0;
  Bits minus = 0;

  constexpr Bits support() const { return plus | minus; }
  constexpr Bits zero(Bits ground) const { return ground & ~support(); }
  constexpr bool empty() const { return support() == 0; }
  constexpr SignedSet operator-() const { return {minus, plus}; }

  Sign at(int e) const {
    if (contains(plus, e)) return Sign::Plus;
    if (contains(minus, e)) return Sign::Minus;
    return Sign::Zero;
  }

  // The representative of {X, -X} whose plus part holds the smallest
  // support element.
  SignedSet canonical() const {
    if (empty()) return *this;
    return contains(plus, lowest(support())) ? *this : -*this;
  }
  bool is_canonical() const { return empty() || contains(plus, lowest(support())); }

  SignedSet reoriented(Bits a) const {
    return {(plus & ~a) | (minus & a), (minus & ~a) | (plus & a)};
  }
  SignedSet restricted(Bits a) const { return {plus & a, minus & a}; }

  friend constexpr bool operator==(const SignedSet&, const SignedSet&) = default;
  friend constexpr auto operator<=>(const SignedSet& a, const SignedSet& b) {
    if (auto c = a.support() <=> b.support(); c != 0) return c;
    return a.plus <=> b.plus;
  }
};

// X <= Y in the product order of signs (X is a conformal restriction of Y).
inline bool leq(const SignedSet& x, const SignedSet& y) {
  return is_subset(x.plus, y.plus) && is_subset(x.minus, y.minus);
}

// No element where the two sets carry opposite nonzero signs.
inline bool conformal(const SignedSet& x, const SignedSet& y) {
  return (x.plus & y.minus) == 0 && (x.minus & y.plus) == 0;
}

inline SignedSet compose(const SignedSet& x, const SignedSet& y) {
  const Bits p = x.plus | (y.plus & ~x.support());
  const Bits m = x.minus | (y.minus & ~x.support());
  return {p, m};
}

// Orthogonality: disjoint supports, or both an agreeing and an opposing
// element on the common support.
inline bool orthogonal(const SignedSet& x, const SignedSet& y) {
  const Bits same = (x.plus & y.plus) | (x.minus & y.minus);
  const Bits opp = (x.plus & y.minus) | (x.minus & y.plus);
  if ((same | opp) == 0) return true;
  return same != 0 && opp != 0;
}

inline SignedSet compress(const SignedSet& x, int e) {
  return {compress(x.plus, e), compress(x.minus, e)};
}

struct SignedSetHash {
  std::size_t operator()(const SignedSet& x) const noexcept {
    return std::hash<Bits>{}(x.plus * 0x9E3779B97F4A7C15ULL ^ x.minus);
  }
};

}  // namespace omsep
