#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "delsub/bitstring.hpp"

namespace delsub::testing {

inline BitString random_bits(std::size_t n, std::mt19937_64& rng) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, static_cast<Bit>(rng() & 1U));
  return x;
}

/// x as a string of n bits, most significant first.
inline BitString bits_of(std::uint64_t v, std::size_t n) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, static_cast<Bit>((v >> (n - 1 - i)) & 1U));
  return x;
}

/// y in B_{1,s}(x), checked directly: some single deletion of x is within
/// Hamming distance s of y.
inline bool in_ball(const BitString& x, const BitString& y, int s) {
  if (y.size() + 1 != x.size()) return false;
  for (std::size_t del = 0; del < x.size(); ++del) {
    std::size_t d = 0;
    for (std::size_t i = 0, j = 0; i < x.size(); ++i) {
      if (i == del) continue;
      d += x[i] != y[j++];
    }
    if (d <= static_cast<std::size_t>(s)) return true;
  }
  return false;
}

/// Remainder of a(X) modulo g(X) over GF(2); coefficient i is X^i.
inline std::vector<std::uint8_t> gf2_mod(std::vector<std::uint8_t> a, const std::vector<std::uint8_t>& g) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = a.size(); i-- > dg;) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) a[i - dg + j] ^= g[j];
  }
  a.resize(dg);
  return a;
}

}  // namespace delsub::testing
