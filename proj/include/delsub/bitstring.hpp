#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delsub {

using Bit = std::uint8_t;

/// Finite binary sequence. One byte per symbol, each 0 or 1.
///
/// Positions are 0-based throughout the library. Text form is a string of
/// '0'/'1' characters with the leftmost character at position 0.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, Bit fill = 0);
  BitString(std::initializer_list<int> bits);
  explicit BitString(std::vector<Bit> bits);

  /// Parses a '0'/'1' string. Throws std::invalid_argument on any other char.
  static BitString parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

  [[nodiscard]] Bit operator[](std::size_t i) const noexcept { return bits_[i]; }
  [[nodiscard]] Bit at(std::size_t i) const;

  void set(std::size_t i, Bit b);
  void flip(std::size_t i) { bits_.at(i) ^= 1U; }

  [[nodiscard]] std::span<const Bit> bits() const noexcept { return bits_; }
  [[nodiscard]] auto begin() const noexcept { return bits_.begin(); }
  [[nodiscard]] auto end() const noexcept { return bits_.end(); }

  /// Substring [pos, pos + len).
  [[nodiscard]] BitString slice(std::size_t pos, std::size_t len) const;
  BitString& append(const BitString& other);
  void push_back(Bit b);

  [[nodiscard]] std::size_t weight() const noexcept;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

struct BitStringHash {
  std::size_t operator()(const BitString& x) const noexcept;
};

/// Deduplicated, lexicographically ordered collection.
using BitSet = std::set<BitString>;

BitString delete_at(const BitString& x, std::size_t i);
BitString insert_at(const BitString& x, std::size_t i, Bit b);

/// Flips every listed position. Positions must be distinct and in range.
BitString substitute(const BitString& x, std::span<const std::size_t> positions);

std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Calls fn(subset) for every subset of {0..n-1} with size <= max_size, in
/// order of increasing size and lexicographically within a size.
void for_each_subset(std::size_t n, std::size_t max_size,
                     const std::function<void(std::span<const std::size_t>)>& fn);

/// All strings reachable from x by exactly one deletion and at most s
/// substitutions. Requires |x| >= 2.
BitSet ball_down(const BitString& x, int s);

/// All z of length |y|+1 with y in ball_down(z, s).
BitSet up_candidates(const BitString& y, int s);

/// Seeded channel: one deletion, then s' in [0, s] distinct flips on the
/// shortened word. The result always lies in ball_down(x, s).
BitString corrupt(const BitString& x, int s, std::uint64_t seed);

}  // namespace delsub
