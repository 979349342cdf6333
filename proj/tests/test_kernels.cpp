#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "delsub/simd/kernels.hpp"

namespace delsub::simd {
namespace {

TEST(Kernels, ScalarAlwaysAvailable) {
  const auto isas = available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::scalar);
  EXPECT_NE(kernels_for(kernels().isa), nullptr);
}

TEST(Kernels, MaskedSumSmall) {
  const std::vector<std::uint8_t> bits{1, 0, 1, 1};
  const std::vector<std::uint64_t> w{1, 3, 6, 10};
  for (Isa isa : available_isas()) {
    EXPECT_EQ(kernels_for(isa)->masked_sum(bits.data(), w.data(), bits.size()), 17U) << isa_name(isa);
  }
}

TEST(Kernels, VariantsMatchScalarOnRandomInputs) {
  std::mt19937_64 rng(20261018);
  const KernelTable& ref = *kernels_for(Isa::scalar);
  for (std::size_t n = 0; n <= 130; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<std::uint8_t> a(n);
      std::vector<std::uint8_t> b(n);
      std::vector<std::uint64_t> w(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = static_cast<std::uint8_t>(rng() & 1U);
        b[i] = static_cast<std::uint8_t>(rng() & 1U);
        // full-range weights exercise wraparound
        w[i] = rep % 2 == 0 ? rng() : rng() % 1000;
      }
      const auto sum = ref.masked_sum(a.data(), w.data(), n);
      const auto dist = ref.hamming(a.data(), b.data(), n);
      for (Isa isa : available_isas()) {
        const KernelTable& k = *kernels_for(isa);
        EXPECT_EQ(k.masked_sum(a.data(), w.data(), n), sum) << isa_name(isa) << " n=" << n;
        EXPECT_EQ(k.hamming(a.data(), b.data(), n), dist) << isa_name(isa) << " n=" << n;
      }
    }
  }
}

TEST(Kernels, HammingExtremes) {
  for (std::size_t n : {0U, 1U, 31U, 32U, 33U, 64U, 100U}) {
    const std::vector<std::uint8_t> zeros(n, 0);
    const std::vector<std::uint8_t> ones(n, 1);
    for (Isa isa : available_isas()) {
      const KernelTable& k = *kernels_for(isa);
      EXPECT_EQ(k.hamming(zeros.data(), ones.data(), n), n);
      EXPECT_EQ(k.hamming(ones.data(), ones.data(), n), 0U);
    }
  }
}

}  // namespace
}  // namespace delsub::simd
