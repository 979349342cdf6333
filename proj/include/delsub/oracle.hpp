#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "delsub/bitstring.hpp"
#include "delsub/checksum.hpp"

// Brute-force ground truth. Nothing here calls into the precode, compress or
// codec modules; those are checked against these routines.

namespace delsub::oracle {

/// Materializes both balls and intersects them.
bool balls_intersect(const BitString& x, const BitString& other, int s);

/// Same predicate via deletions: some single deletion of x and some single
/// deletion of `other` are within Hamming distance 2s.
bool balls_intersect_remark1(const BitString& x, const BitString& other, int s);

struct CodeCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  /// Lexicographically first violating pair (by index order in the codebook).
  std::optional<std::pair<BitString, BitString>> witness;
};

/// True when every pair of distinct members has disjoint balls.
CodeCheck verify_code(std::span<const BitString> codebook, int s);

/// One fiber of the checksum: all strings of length n with checksum `residue`.
struct SieveCode {
  std::size_t n = 0;
  int s = 0;
  Checksum residue;
  std::vector<BitString> codebook;  // sorted
};

struct SieveResult {
  SieveCode best;  // the largest fiber; ties go to the smallest packed residue
  std::size_t total_strings = 0;
  std::size_t nonempty_buckets = 0;
  std::vector<std::size_t> bucket_sizes;  // in packed-residue order
};

inline constexpr std::size_t kDefaultSieveMaxN = 22;

/// Buckets all of {0,1}^n by checksum (block length n). Throws
/// std::invalid_argument when n > max_n.
SieveResult sieve_cr(std::size_t n, int s, std::size_t max_n = kDefaultSieveMaxN);

/// All buckets, as produced by the sieve, keyed by packed residue order.
std::vector<SieveCode> sieve_buckets(std::size_t n, int s, std::size_t max_n = kDefaultSieveMaxN);

/// The unique z in up_candidates(y, s) with the code's residue.
BitString decode_cr(const BitString& y, const SieveCode& code);

struct Lemma3Report {
  std::size_t length = 0;
  int s = 0;
  std::size_t strings = 0;
  std::size_t buckets = 0;
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  std::optional<std::pair<BitString, BitString>> witness;
};

/// Exhaustively checks that no two distinct strings of length L with
/// intersecting balls share a checksum.
Lemma3Report verify_lemma3(std::size_t length, int s, std::size_t max_n = kDefaultSieveMaxN);

}  // namespace delsub::oracle
