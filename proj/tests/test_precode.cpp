#include <gtest/gtest.h>

#include <random>
#include <set>

#include "delsub/precode.hpp"
#include "test_support.hpp"

namespace delsub {
namespace {

using testing::bits_of;
using testing::random_bits;

// Codeword as a GF(2) polynomial: position i carries X^(n0-1-i).
std::vector<std::uint8_t> as_poly(const BitString& c) {
  std::vector<std::uint8_t> p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) p[c.size() - 1 - i] = c[i];
  return p;
}

std::vector<std::uint8_t> as_bytes(const Gf2Poly& g) { return {g.begin(), g.end()}; }

bool divisible(const BitString& c, const Gf2Poly& g) {
  for (std::uint8_t b : testing::gf2_mod(as_poly(c), as_bytes(g))) {
    if (b != 0) return false;
  }
  return true;
}

TEST(GaloisField, DefaultPolynomialsArePrimitive) {
  for (int m = 3; m <= 16; ++m) {
    const GaloisField f(m);
    EXPECT_EQ(f.order(), (1U << m) - 1);
    std::set<std::uint32_t> seen;
    for (std::uint32_t e = 0; e < f.order(); ++e) seen.insert(f.exp(e));
    EXPECT_EQ(seen.size(), f.order()) << "m=" << m;
    EXPECT_EQ(seen.count(0), 0U);
    EXPECT_EQ(f.exp(f.order()), 1U);
  }
  EXPECT_EQ(default_primitive_poly(3), 0xBU);
  EXPECT_EQ(default_primitive_poly(4), 0x13U);
  EXPECT_THROW(default_primitive_poly(2), std::out_of_range);
  EXPECT_THROW(default_primitive_poly(17), std::out_of_range);
}

TEST(GaloisField, RejectsNonPrimitive) {
  EXPECT_THROW(GaloisField(4, 0x1F), std::invalid_argument);  // x^4+x^3+x^2+x+1 has order 5
  EXPECT_THROW(GaloisField(4, 0x0B), std::invalid_argument);  // wrong degree
  EXPECT_NO_THROW(GaloisField(4, 0x19));                       // x^4+x^3+1
}

TEST(GaloisField, MulMatchesShiftAndAdd) {
  const GaloisField f(5);
  for (std::uint32_t a = 0; a < 32; ++a) {
    for (std::uint32_t b = 0; b < 32; ++b) {
      std::uint32_t prod = 0;
      std::uint32_t x = a;
      for (std::uint32_t y = b; y != 0; y >>= 1) {
        if (y & 1U) prod ^= x;
        x <<= 1;
        if (x & 32U) x ^= f.primitive_poly();
      }
      EXPECT_EQ(f.mul(a, b), prod);
    }
  }
  EXPECT_THROW((void)f.log(0), std::domain_error);
}

TEST(BchGenerator, Examples) {
  EXPECT_EQ(poly_string(bch_generator(GaloisField(3), 1)), "1011");
  EXPECT_EQ(poly_string(bch_generator(GaloisField(4), 1)), "10011");
  // (x^4+x+1)(x^4+x^3+x^2+x+1)
  EXPECT_EQ(poly_string(bch_generator(GaloisField(4), 2)), "111010001");
}

TEST(BchGenerator, DividesXnMinusOne) {
  for (int m = 3; m <= 7; ++m) {
    const GaloisField f(m);
    for (int s = 1; s <= 3; ++s) {
      const Gf2Poly g = bch_generator(f, s);
      if (g.size() - 1 >= f.order()) continue;
      std::vector<std::uint8_t> xn(f.order() + 1, 0);
      xn.front() = 1;
      xn.back() = 1;
      for (std::uint8_t b : testing::gf2_mod(xn, as_bytes(g))) EXPECT_EQ(b, 0) << "m=" << m << " s=" << s;
    }
  }
}

TEST(BchSelect, Examples) {
  const BchCode a = BchCode::select(4, 1);
  EXPECT_EQ(a.m(), 3);
  EXPECT_EQ(a.kprime(), 4U);
  EXPECT_EQ(a.n0(), 7U);
  EXPECT_EQ(poly_string(a.generator()), "1011");

  const BchCode b = BchCode::select(5, 2);
  EXPECT_EQ(b.m(), 4);
  EXPECT_EQ(b.kprime(), 7U);
  EXPECT_EQ(b.n0(), 13U);

  const BchCode c = BchCode::select(16, 2);
  EXPECT_EQ(c.m(), 5);
  EXPECT_EQ(c.kprime(), 21U);
  EXPECT_EQ(c.n0(), 26U);

  EXPECT_EQ(BchCode::select(11, 1).n0(), 15U);
  EXPECT_THROW(BchCode::select(0, 1), std::invalid_argument);
  EXPECT_THROW(BchCode::select(4, 0), std::invalid_argument);
  EXPECT_THROW(BchCode(5, 1, 3), std::invalid_argument);
}

TEST(BchSelect, SmallestFieldAndRedundancyBound) {
  for (int s = 1; s <= 3; ++s) {
    for (std::size_t k : {1UL, 2UL, 3UL, 4UL, 5UL, 7UL, 8UL, 11UL, 12UL, 16UL, 26UL, 27UL, 57UL, 58UL, 120UL, 121UL, 200UL}) {
      const BchCode code = BchCode::select(k, s);
      EXPECT_GE(code.kprime(), k);
      EXPECT_GT(code.n0(), static_cast<std::size_t>(2 * s + 1));
      EXPECT_LE(code.n0() - k, static_cast<std::size_t>(s * code.m()));
      if (code.m() > 3) {
        // the next smaller field is either too small or too short
        bool smaller_ok = false;
        try {
          const BchCode alt(k, s, code.m() - 1);
          smaller_ok = alt.n0() > static_cast<std::size_t>(2 * s + 1);
        } catch (const std::invalid_argument&) {
        }
        EXPECT_FALSE(smaller_ok) << "k=" << k << " s=" << s;
      }
    }
  }
}

TEST(BchEncode, SystematicAndDivisible) {
  std::mt19937_64 rng(2);
  for (int s = 1; s <= 3; ++s) {
    for (std::size_t k : {1UL, 4UL, 11UL, 16UL, 57UL, 120UL}) {
      const BchCode code = BchCode::select(k, s);
      for (int t = 0; t < 20; ++t) {
        const BitString x = random_bits(k, rng);
        const BitString c = code.encode(x);
        ASSERT_EQ(c.size(), code.n0());
        EXPECT_EQ(c.slice(0, k), x);
        EXPECT_TRUE(divisible(c, code.generator()));
        EXPECT_TRUE(code.is_codeword(c));
        EXPECT_EQ(code.syndrome(c.bits()), 0U);
        EXPECT_EQ(code.extract_info(c), x);
      }
    }
  }
  EXPECT_EQ(BchCode::select(4, 1).encode({1, 0, 0, 0}).str(), "1000101");
  EXPECT_THROW((void)BchCode::select(4, 1).encode({1, 0, 0}), std::invalid_argument);
}

TEST(BchCode, IsCodewordMatchesDivisibility) {
  for (const auto& [k, s] : {std::pair<std::size_t, int>{4, 1}, {5, 2}}) {
    const BchCode code = BchCode::select(k, s);
    for (std::uint64_t v = 0; v < (1ULL << code.n0()); ++v) {
      const BitString z = bits_of(v, code.n0());
      EXPECT_EQ(code.is_codeword(z), divisible(z, code.generator()));
    }
    EXPECT_THROW((void)code.extract_info(bits_of(1, code.n0())), std::invalid_argument);
  }
}

TEST(BchCode, SingleFlipsAreNotCodewords) {
  const BchCode code = BchCode::select(4, 1);
  EXPECT_TRUE(code.is_codeword(BitString(7)));
  EXPECT_EQ(code.extract_info(BitString(7)), BitString(4));
  for (std::uint64_t v = 0; v < 16; ++v) {
    const BitString c = code.encode(bits_of(v, 4));
    for (std::size_t i = 0; i < 7; ++i) {
      BitString z = c;
      z.flip(i);
      EXPECT_FALSE(code.is_codeword(z));
      EXPECT_EQ(code.bounded_decode(z), c);
    }
  }
}

TEST(BchCode, MinimumDistanceExhaustive) {
  for (int s = 1; s <= 3; ++s) {
    for (std::size_t k = 1; k <= 8; ++k) {
      const BchCode code = BchCode::select(k, s);
      std::size_t min_weight = code.n0() + 1;
      for (std::uint64_t v = 1; v < (1ULL << k); ++v) {
        min_weight = std::min(min_weight, code.encode(bits_of(v, k)).weight());
      }
      if (k == 1 && code.n0() < static_cast<std::size_t>(2 * s + 1)) continue;
      EXPECT_GE(min_weight, static_cast<std::size_t>(2 * s + 1)) << "k=" << k << " s=" << s;
    }
  }
}

TEST(BchCode, RandomPairsAreFar) {
  std::mt19937_64 rng(4);
  for (const auto& [k, s] : {std::pair<std::size_t, int>{16, 2}, {57, 3}}) {
    const BchCode code = BchCode::select(k, s);
    const auto d = static_cast<std::size_t>(2 * s + 1);
    for (int t = 0; t < 10000; ++t) {
      const BitString a = random_bits(k, rng);
      const BitString b = random_bits(k, rng);
      if (a == b) continue;
      ASSERT_GE(hamming_distance(code.encode(a), code.encode(b)), d);
    }
    // messages one bit apart
    for (std::size_t i = 0; i < k; ++i) {
      const BitString a = random_bits(k, rng);
      BitString b = a;
      b.flip(i);
      EXPECT_GE(hamming_distance(code.encode(a), code.encode(b)), d) << "i=" << i;
    }
  }
}

// Every word: bounded_decode returns the codeword within distance s if one
// exists, checked against a scan over the whole codebook.
void check_bounded_decode(std::size_t k, int s) {
  const BchCode code = BchCode::select(k, s);
  std::vector<BitString> book;
  for (std::uint64_t v = 0; v < (1ULL << k); ++v) book.push_back(code.encode(bits_of(v, k)));
  for (int budget = 0; budget <= s; ++budget) {
    for (std::uint64_t v = 0; v < (1ULL << code.n0()); ++v) {
      const BitString z = bits_of(v, code.n0());
      std::optional<BitString> want;
      for (const BitString& c : book) {
        if (hamming_distance(c, z) <= static_cast<std::size_t>(budget)) {
          ASSERT_FALSE(want.has_value());
          want = c;
        }
      }
      EXPECT_EQ(code.bounded_decode(z, budget), want) << z.str();
    }
  }
}

TEST(BchBoundedDecode, ExhaustiveK4S1) { check_bounded_decode(4, 1); }
TEST(BchBoundedDecode, ExhaustiveK5S2) { check_bounded_decode(5, 2); }

TEST(BchBoundedDecode, RandomErrorsUpToBudget) {
  std::mt19937_64 rng(8);
  for (const auto& [k, s] : {std::pair<std::size_t, int>{16, 2}, {64, 3}, {120, 1}}) {
    const BchCode code = BchCode::select(k, s);
    for (int t = 0; t < 300; ++t) {
      const BitString c = code.encode(random_bits(k, rng));
      BitString z = c;
      std::set<std::size_t> pos;
      const auto weight = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(s + 1));
      while (pos.size() < weight) pos.insert(rng() % code.n0());
      for (std::size_t p : pos) z.flip(p);
      EXPECT_EQ(code.bounded_decode(z), c);
      const auto pattern = code.error_pattern(code.syndrome(z.bits()));
      ASSERT_TRUE(pattern.has_value());
      EXPECT_EQ(std::set<std::size_t>(pattern->begin(), pattern->end()), pos);
    }
  }
}

TEST(BchBoundedDecode, DistanceSPlusOneFromOnlyCodewordIsEmpty) {
  // the zero word and its s+1 flips: the nearest codeword is the zero word
  const BchCode code = BchCode::select(16, 2);
  BitString z(code.n0());
  z.flip(0);
  z.flip(5);
  z.flip(9);
  const auto got = code.bounded_decode(z);
  if (got) {
    EXPECT_LE(hamming_distance(*got, z), 2U);
    EXPECT_TRUE(code.is_codeword(*got));
  }
  BitString near(code.n0());
  near.flip(3);
  EXPECT_EQ(code.bounded_decode(near, 0), std::nullopt);
  EXPECT_THROW((void)code.bounded_decode(near, 3), std::invalid_argument);
  EXPECT_THROW((void)code.bounded_decode(BitString(3)), std::invalid_argument);
}

TEST(BchCode, ColumnsAreSyndromesOfUnitVectors) {
  const BchCode code = BchCode::select(26, 3);
  for (std::size_t i = 0; i < code.n0(); ++i) {
    BitString e(code.n0());
    e.set(i, 1);
    EXPECT_EQ(code.column(i), code.syndrome(e.bits()));
  }
}

}  // namespace
}  // namespace delsub
