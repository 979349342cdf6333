#pragma once

#include <cstddef>

#include "delsub/bitstring.hpp"
#include "delsub/checksum.hpp"
#include "delsub/compress.hpp"
#include "delsub/errors.hpp"
#include "delsub/precode.hpp"

namespace delsub {

/// Everything derived from (k, s). The codeword is three segments:
///
///   [0, n0)              pre-code codeword h(x)
///   [n0, n0+n1)          syndrome tag g(h(x))
///   [n0+n1, n)           fold-times repetition of the packed checksum of the tag
struct CodecParams {
  std::size_t k = 0;
  int s = 0;
  SyndromeCompressor compressor;
  /// Checksum over the tag segment (block length n1).
  ChecksumParams tag_checksum;
  std::size_t n0 = 0;
  std::size_t w_p = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;  // payload bits of the third segment
  std::size_t fold = 0;
  std::size_t n = 0;

  [[nodiscard]] const BchCode& code() const noexcept { return compressor.code(); }
  [[nodiscard]] std::size_t segment3_length() const noexcept { return fold * n2; }
  [[nodiscard]] std::size_t redundancy() const noexcept { return n - k; }
  /// (3s+4) log2 n, for comparison with the achieved redundancy.
  [[nodiscard]] double reference_redundancy() const;
};

/// Throws std::invalid_argument when (k, s) admits no valid layout.
CodecParams derive_params(std::size_t k, int s);

BitString encode(const BitString& x, const CodecParams& params);

struct SplitWord {
  BitString y1;  // n0 - 1 symbols
  BitString y2;  // n1 - 1 symbols
  BitString y3;  // fold * n2 - 1 symbols
};

/// Cuts a length n-1 word into per-segment words, dropping the symbols at
/// the last position of segments one and two.
SplitWord split(const BitString& y, const CodecParams& params);

/// Intermediate results of the staged decoder.
struct DecodeTrace {
  BitString checksum_bits;  // recovered from the repetition segment
  BitString tag_segment;    // recovered second segment
  BitString precoded;       // recovered h(x)
  BitString message;
};

/// Accepts words of length n-1 (one deletion) or n (no deletion; the last
/// symbol is dropped first). Throws DecodeError when the word is outside the
/// correctable set and InvariantViolation on a uniqueness failure.
DecodeTrace decode_trace(const BitString& y, const CodecParams& params);

BitString decode(const BitString& y, const CodecParams& params);

}  // namespace delsub
