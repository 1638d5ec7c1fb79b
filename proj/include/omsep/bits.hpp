#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omsep {

// Subsets of a ground set {0,...,n-1}, n <= 63.
using Bits = std::uint64_t;

inline constexpr int kMaxElements = 63;

inline constexpr Bits bit(int i) { return Bits{1} << i; }
inline constexpr Bits full_set(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }
inline constexpr int popcount(Bits x) { return std::popcount(x); }
inline constexpr int lowest(Bits x) { return std::countr_zero(x); }
inline constexpr int highest(Bits x) { return 63 - std::countl_zero(x); }
inline constexpr bool contains(Bits x, int i) { return (x >> i) & 1U; }
inline constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }

// Removes position e and shifts higher positions down by one.
inline constexpr Bits compress(Bits x, int e) {
  return (x & (bit(e) - 1)) | ((x >> (e + 1)) << e);
}

// Inverse of compress: opens an empty slot at position e.
inline constexpr Bits expand(Bits x, int e) {
  return (x & (bit(e) - 1)) | ((x >> e) << (e + 1));
}

inline std::vector<int> elements(Bits x) {
  std::vector<int> out;
  out.reserve(popcount(x));
  while (x) {
    out.push_back(lowest(x));
    x &= x - 1;
  }
  return out;
}

inline Bits from_elements(const std::vector<int>& es) {
  Bits x = 0;
  for (int e : es) x |= bit(e);
  return x;
}

// Next subset of the same size (Gosper's hack); returns 0 past the last one
// below limit.
inline Bits next_same_size(Bits x, Bits limit) {
  const Bits c = x & (~x + 1);
  const Bits r = x + c;
  const Bits y = (((r ^ x) >> 2) / c) | r;
  return y < limit ? y : 0;
}

// Calls f(S) for every k-subset of {0..n-1} in increasing numeric order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Bits{0});
    return;
  }
  const Bits limit = bit(n);
  for (Bits s = bit(k) - 1; s != 0; s = next_same_size(s, limit)) f(s);
}

}  // namespace omsep
