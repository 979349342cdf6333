#include "delsub/simd/kernels.hpp"

namespace delsub::simd::detail {

namespace {

std::uint64_t masked_sum_scalar(const std::uint8_t* bits, const std::uint64_t* weights,
                                std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += weights[i] & (0 - static_cast<std::uint64_t>(bits[i]));
  return acc;
}

std::size_t hamming_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += a[i] != b[i];
  return d;
}

constexpr KernelTable kScalar{Isa::scalar, &masked_sum_scalar, &hamming_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace delsub::simd::detail
