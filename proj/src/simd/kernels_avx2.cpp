// Compiled with -mavx2 on x86-64; only reached after a runtime CPU check.
#include "delsub/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <cstring>

namespace delsub::simd::detail {

namespace {

std::uint64_t masked_sum_avx2(const std::uint8_t* bits, const std::uint64_t* weights,
                              std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc0 = zero;
  __m256i acc1 = zero;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::int32_t lo = 0;
    std::int32_t hi = 0;
    std::memcpy(&lo, bits + i, 4);
    std::memcpy(&hi, bits + i + 4, 4);
    // 0/1 byte -> 0 or all-ones lane
    const __m256i m0 = _mm256_sub_epi64(zero, _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(lo)));
    const __m256i m1 = _mm256_sub_epi64(zero, _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(hi)));
    const __m256i w0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weights + i));
    const __m256i w1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weights + i + 4));
    acc0 = _mm256_add_epi64(acc0, _mm256_and_si256(m0, w0));
    acc1 = _mm256_add_epi64(acc1, _mm256_and_si256(m1, w1));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc0, acc1));
  std::uint64_t acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) acc += weights[i] & (0 - static_cast<std::uint64_t>(bits[i]));
  return acc;
}

std::size_t hamming_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t d = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    d += static_cast<std::size_t>(std::popcount(~eq));
  }
  for (; i < n; ++i) d += a[i] != b[i];
  return d;
}

constexpr KernelTable kAvx2{Isa::avx2, &masked_sum_avx2, &hamming_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace delsub::simd::detail
