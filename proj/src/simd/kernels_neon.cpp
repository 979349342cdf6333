// Built only for AArch64, where NEON is architecturally guaranteed.
#include "delsub/simd/kernels.hpp"

#include <arm_neon.h>

namespace delsub::simd::detail {

namespace {

std::uint64_t masked_sum_neon(const std::uint8_t* bits, const std::uint64_t* weights,
                              std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t b = {bits[i], bits[i + 1]};
    const uint64x2_t mask = vreinterpretq_u64_s64(vnegq_s64(vreinterpretq_s64_u64(b)));
    acc = vaddq_u64(acc, vandq_u64(mask, vld1q_u64(weights + i)));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += weights[i] & (0 - static_cast<std::uint64_t>(bits[i]));
  return total;
}

std::size_t hamming_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t d = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t ne = vmvnq_u8(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    d += vaddvq_u8(vshrq_n_u8(ne, 7));
  }
  for (; i < n; ++i) d += a[i] != b[i];
  return d;
}

constexpr KernelTable kNeon{Isa::neon, &masked_sum_neon, &hamming_neon};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace delsub::simd::detail
