#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "delsub/bitstring.hpp"
#include "delsub/checksum.hpp"
#include "delsub/precode.hpp"

namespace delsub {

/// Compressed checksum of a pre-code codeword: the packed checksum of c
/// reduced modulo a per-codeword modulus, plus the modulus itself.
struct SyndromeTag {
  BigInt residue;
  BigInt modulus;
  std::size_t field_width = 0;
  /// big-endian residue (field_width bits) followed by big-endian modulus
  BitString packed;
};

/// Pre-code codewords whose single-deletion s-substitution balls meet the
/// center's ball. Members are sorted and include the center.
struct Neighborhood {
  BitString center;
  std::vector<BitString> members;
};

/// Bits per tag field: ceil((s+2) log2 n0) + 8.
std::size_t tag_field_width(std::size_t n0, int s);

/// Smallest p >= 1 that divides no element of `values`. Throws WidthExceeded
/// when p would reach `limit`.
BigInt smallest_non_divisor(std::span<const BigInt> values, const BigInt& limit);

/// Syndrome compression over a BCH pre-code. Holds the pre-code, the checksum
/// parameters with block length n0, and the tag layout.
class SyndromeCompressor {
 public:
  explicit SyndromeCompressor(BchCode code);

  [[nodiscard]] const BchCode& code() const noexcept { return code_; }
  [[nodiscard]] const ChecksumParams& checksum_params() const noexcept { return checksum_; }
  [[nodiscard]] std::size_t field_width() const noexcept { return width_; }
  [[nodiscard]] std::size_t tag_length() const noexcept { return 2 * width_; }

  /// Packed checksum M(f(c)) with block length n0.
  [[nodiscard]] BigInt packed_checksum(const BitString& c) const;

  /// Enumerates the neighborhood in four steps: delete one symbol of c,
  /// insert one symbol, flip <= s symbols other than the inserted one, then
  /// bounded-distance decode.
  [[nodiscard]] Neighborhood neighborhood(const BitString& c) const;

  /// Smallest modulus separating the center's packed checksum from every
  /// other member's. Throws InvariantViolation if two members share a
  /// checksum and WidthExceeded if the modulus does not fit a tag field.
  [[nodiscard]] BigInt find_modulus(const BitString& c, const Neighborhood& nbhd) const;

  [[nodiscard]] SyndromeTag tag(const BitString& c) const;

  /// Splits a packed tag. Throws DecodeError(syndrome_tag) on a zero modulus
  /// or a residue not below the modulus.
  [[nodiscard]] SyndromeTag parse_tag(const BitString& packed) const;

  /// Recovers the codeword c from y1 in ball_down(c, s) and c's tag.
  [[nodiscard]] BitString recover(const BitString& y1, const SyndromeTag& tag) const;

 private:
  BchCode code_;
  ChecksumParams checksum_;
  std::size_t width_;
};

}  // namespace delsub
