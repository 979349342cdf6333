#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "delsub/bitstring.hpp"

namespace delsub {

using BigInt = boost::multiprecision::cpp_int;

/// Partial power sums: element i (0-based) is sum_{l=1}^{i+1} l^(order-1).
/// order >= 1.
std::vector<BigInt> weight_vector(int order, std::size_t length);

/// Parameters of the higher-order weighted checksum over blocks of length L
/// with substitution budget s. There are 2s+1 components; component j
/// (1-based) is reduced modulo (2s+1) * L^j.
class ChecksumParams {
 public:
  /// Requires s >= 1 and L > 2s+1.
  ChecksumParams(std::size_t length, int s);

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] int s() const noexcept { return s_; }
  [[nodiscard]] int components() const noexcept { return 2 * s_ + 1; }

  /// (2s+1) * L^j for j in [1, 2s+1].
  [[nodiscard]] const BigInt& modulus(int j) const;
  /// Mixed-radix place value of component j: product of moduli 1..j-1.
  [[nodiscard]] const BigInt& place_value(int j) const;
  /// Number of valid checksums (product of all moduli).
  [[nodiscard]] const BigInt& range() const noexcept { return range_; }

  [[nodiscard]] const std::vector<BigInt>& weights(int j) const;

  /// Bits needed for a packed checksum: ceil(log2(range)).
  [[nodiscard]] std::size_t packed_width() const noexcept { return packed_width_; }

  /// (s+1)(2s+1) log2 L + (2s+1) log2(2s+1), as a real number.
  [[nodiscard]] double xi() const noexcept;

  /// True when every unreduced inner product fits in 64 bits, enabling the
  /// word-sized evaluation path.
  [[nodiscard]] bool word_sized() const noexcept { return word_sized_; }
  /// Weights and moduli as 64-bit words; only valid when word_sized().
  [[nodiscard]] const std::vector<std::uint64_t>& weights_u64(int j) const;
  [[nodiscard]] std::uint64_t modulus_u64(int j) const;

  /// Copy that always takes the arbitrary-precision path. Used to check the
  /// word-sized path against it.
  [[nodiscard]] ChecksumParams with_wide_arithmetic() const;

 private:
  void check_order(int j) const;

  std::size_t length_;
  int s_;
  std::vector<BigInt> moduli_;
  std::vector<BigInt> place_values_;
  std::vector<std::vector<BigInt>> weights_;
  BigInt range_;
  std::size_t packed_width_ = 0;
  bool word_sized_ = false;
  std::vector<std::vector<std::uint64_t>> weights_u64_;
  std::vector<std::uint64_t> moduli_u64_;
};

/// Component vector r_1..r_{2s+1}; stored 0-based (r[0] is r_1).
struct Checksum {
  std::vector<BigInt> r;

  friend bool operator==(const Checksum&, const Checksum&) = default;
};

Checksum f_checksum(const BitString& x, const ChecksumParams& params);

/// Mixed-radix value sum_j r_j * place_value(j). Throws on out-of-range
/// components.
BigInt pack_value(const Checksum& r, const ChecksumParams& params);
/// pack_value as a big-endian string of packed_width() bits.
BitString pack_bits(const Checksum& r, const ChecksumParams& params);

Checksum unpack(const BigInt& value, const ChecksumParams& params);
Checksum unpack(const BitString& bits, const ChecksumParams& params);

/// Big-endian fixed-width encoding. Throws if value does not fit.
BitString to_bits(const BigInt& value, std::size_t width);
BigInt from_bits(const BitString& bits);
BigInt from_bits(std::span<const Bit> bits);

/// Every z in up_candidates(y, s) with f_checksum(z) == target, sorted and
/// deduplicated. |y| must be L-1.
std::vector<BitString> checksum_survivors(const BitString& y, const Checksum& target,
                                          const ChecksumParams& params);

}  // namespace delsub
