#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Data-parallel inner loops shared by the checksum, precode and oracle
// modules. Every kernel has a scalar reference; vector variants must return
// bit-identical results and are checked against it in tests/test_kernels.cpp.

namespace delsub::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;

  /// Sum of weights[i] over positions with bits[i] == 1, modulo 2^64.
  /// bits must hold only 0/1 bytes.
  std::uint64_t (*masked_sum)(const std::uint8_t* bits, const std::uint64_t* weights,
                              std::size_t n);

  /// Number of positions where a and b differ.
  std::size_t (*hamming)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
};

/// Best table for the running CPU, selected once on first use.
const KernelTable& kernels();

/// Table for a specific ISA, or nullptr when it is not compiled in or the CPU
/// lacks it.
const KernelTable* kernels_for(Isa isa);

std::vector<Isa> available_isas();

std::string_view isa_name(Isa isa);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace delsub::simd
