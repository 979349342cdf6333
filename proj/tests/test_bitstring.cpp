#include <gtest/gtest.h>

#include <map>
#include <random>

#include "delsub/bitstring.hpp"
#include "test_support.hpp"

namespace delsub {
namespace {

using testing::bits_of;
using testing::in_ball;

TEST(BitString, ParseAndPrint) {
  EXPECT_EQ(BitString::parse("0110").str(), "0110");
  EXPECT_EQ(BitString::parse(""), BitString());
  EXPECT_THROW(BitString::parse("01a"), std::invalid_argument);
  EXPECT_THROW(BitString({0, 2}), std::invalid_argument);
}

TEST(BitString, OrderingIsLexicographic) {
  EXPECT_LT(BitString({0, 1}), BitString({1, 0}));
  EXPECT_LT(BitString({0}), BitString({0, 0}));
}

TEST(DeleteAt, Examples) {
  EXPECT_EQ(delete_at({0, 1, 1}, 0), BitString({1, 1}));
  EXPECT_EQ(delete_at({0, 0}, 1), BitString({0}));
  EXPECT_EQ(delete_at({1, 0, 1, 1, 0}, 2), BitString({1, 0, 1, 0}));
  EXPECT_THROW(delete_at({1, 0}, 2), std::out_of_range);
  EXPECT_THROW(delete_at({}, 0), std::out_of_range);
}

TEST(InsertAt, Examples) {
  EXPECT_EQ(insert_at({1, 1}, 0, 0), BitString({0, 1, 1}));
  EXPECT_EQ(insert_at({}, 0, 1), BitString({1}));
  EXPECT_EQ(insert_at({1, 0}, 2, 0), BitString({1, 0, 0}));
  EXPECT_THROW(insert_at({1, 0}, 3, 0), std::out_of_range);
}

TEST(InsertAt, DeleteUndoesInsert) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const BitString x = bits_of(v, n);
      for (std::size_t i = 0; i <= n; ++i) {
        for (Bit b = 0; b <= 1; ++b) {
          const BitString z = insert_at(x, i, b);
          EXPECT_EQ(z[i], b);
          EXPECT_EQ(delete_at(z, i), x);
        }
      }
    }
  }
}

TEST(Substitute, Examples) {
  const std::vector<std::size_t> one{1};
  const std::vector<std::size_t> two{0, 3};
  const std::vector<std::size_t> none;
  EXPECT_EQ(substitute({0, 0, 0}, one), BitString({0, 1, 0}));
  EXPECT_EQ(substitute({1, 0, 1}, none), BitString({1, 0, 1}));
  EXPECT_EQ(substitute({1, 1, 0, 0}, two), BitString({0, 1, 0, 1}));
  EXPECT_EQ(hamming_distance(substitute({1, 1, 0, 0}, two), {1, 1, 0, 0}), 2U);
  const std::vector<std::size_t> bad{4};
  const std::vector<std::size_t> dup{1, 1};
  EXPECT_THROW(substitute({1, 1, 0, 0}, bad), std::out_of_range);
  EXPECT_THROW(substitute({1, 1, 0, 0}, dup), std::invalid_argument);
}

TEST(ForEachSubset, CountsMatchBinomials) {
  std::map<std::size_t, int> by_size;
  for_each_subset(6, 3, [&](std::span<const std::size_t> s) { ++by_size[s.size()]; });
  EXPECT_EQ(by_size[0], 1);
  EXPECT_EQ(by_size[1], 6);
  EXPECT_EQ(by_size[2], 15);
  EXPECT_EQ(by_size[3], 20);
  int calls = 0;
  for_each_subset(2, 5, [&](std::span<const std::size_t>) { ++calls; });
  EXPECT_EQ(calls, 4);
}

TEST(BallDown, Examples) {
  EXPECT_EQ(ball_down({0, 1}, 0), (BitSet{{0}, {1}}));
  EXPECT_EQ(ball_down({0, 0}, 0), (BitSet{{0}}));
  EXPECT_EQ(ball_down({0, 0}, 1), (BitSet{{0}, {1}}));
  EXPECT_THROW(ball_down({1}, 1), std::invalid_argument);
  EXPECT_THROW(ball_down({}, 0), std::invalid_argument);
}

TEST(BallDown, MatchesDirectMembership) {
  for (int s = 0; s <= 2; ++s) {
    for (std::size_t n = 2; n <= 7; ++n) {
      for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
        const BitString x = bits_of(v, n);
        const BitSet ball = ball_down(x, s);
        for (std::uint64_t w = 0; w < (1ULL << (n - 1)); ++w) {
          const BitString y = bits_of(w, n - 1);
          EXPECT_EQ(ball.count(y) == 1, in_ball(x, y, s)) << x.str() << " " << y.str();
        }
      }
    }
  }
}

TEST(BallDown, ZeroBudgetSizeIsRunCount) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const BitString x = bits_of(v, n);
      std::size_t runs = 1;
      for (std::size_t i = 1; i < n; ++i) runs += x[i] != x[i - 1];
      EXPECT_EQ(ball_down(x, 0).size(), runs);
    }
  }
}

TEST(UpCandidates, Examples) {
  EXPECT_EQ(up_candidates({0}, 0), (BitSet{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(up_candidates({}, 0), (BitSet{{0}, {1}}));
  EXPECT_EQ(up_candidates({}, 2), (BitSet{{0}, {1}}));
  EXPECT_EQ(up_candidates({1}, 1), (BitSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(UpCandidates, DualToBallDown) {
  for (int s = 0; s <= 2; ++s) {
    const std::size_t max_len = s == 2 ? 6 : 8;
    for (std::size_t m = 1; m <= max_len; ++m) {
      // y in ball_down(z) for every z of length m+1
      std::map<BitString, BitSet> preimages;
      for (std::uint64_t v = 0; v < (1ULL << (m + 1)); ++v) {
        const BitString z = bits_of(v, m + 1);
        for (const BitString& y : ball_down(z, s)) preimages[y].insert(z);
      }
      for (std::uint64_t w = 0; w < (1ULL << m); ++w) {
        const BitString y = bits_of(w, m);
        EXPECT_EQ(up_candidates(y, s), preimages[y]) << "y=" << y.str() << " s=" << s;
      }
    }
  }
}

TEST(BallDown, IntersectionIsSymmetric) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const BitString a = testing::random_bits(7, rng);
    const BitString b = testing::random_bits(7, rng);
    const BitSet ba = ball_down(a, 1);
    const BitSet bb = ball_down(b, 1);
    bool ab = false;
    bool ba_hit = false;
    for (const auto& y : ba) ab = ab || bb.count(y) != 0;
    for (const auto& y : bb) ba_hit = ba_hit || ba.count(y) != 0;
    EXPECT_EQ(ab, ba_hit);
  }
}

TEST(Corrupt, ZeroBudgetIsADeletion) {
  const BitString x = BitString::parse("0110100111");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BitString y = corrupt(x, 0, seed);
    EXPECT_EQ(ball_down(x, 0).count(y), 1U);
  }
}

TEST(Corrupt, StaysInBallAndIsDeterministic) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int s = t % 3;
    const BitString x = testing::random_bits(2 + static_cast<std::size_t>(t % 12), rng);
    const std::uint64_t seed = rng();
    const BitString y = corrupt(x, s, seed);
    EXPECT_EQ(y, corrupt(x, s, seed));
    EXPECT_TRUE(in_ball(x, y, s));
  }
  const BitString zeros(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BitString y = corrupt(zeros, 1, seed);
    ASSERT_EQ(y.size(), 3U);
    EXPECT_LE(y.weight(), 1U);
  }
  EXPECT_THROW(corrupt({1}, 1, 0), std::invalid_argument);
}

TEST(Corrupt, ReachesEveryBallElement) {
  const BitString x = BitString::parse("01101");
  BitSet seen;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) seen.insert(corrupt(x, 1, seed));
  EXPECT_EQ(seen, ball_down(x, 1));
}

}  // namespace
}  // namespace delsub
