#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delsub/bitstring.hpp"

namespace delsub {

/// Minimal-weight primitive polynomial for GF(2^m), m in [3, 16], as a bit
/// mask including the x^m term (x^3+x+1 -> 0xb).
std::uint32_t default_primitive_poly(int m);

/// GF(2^m) with log/antilog tables.
class GaloisField {
 public:
  explicit GaloisField(int m);
  GaloisField(int m, std::uint32_t primitive_poly);

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t primitive_poly() const noexcept { return poly_; }
  /// Multiplicative group order 2^m - 1.
  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }

  /// alpha^(e mod order).
  [[nodiscard]] std::uint32_t exp(std::uint64_t e) const noexcept { return exp_[e % order_]; }
  [[nodiscard]] std::uint32_t log(std::uint32_t x) const;
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;

 private:
  int m_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// GF(2) polynomial, coefficient i is the coefficient of x^i.
using Gf2Poly = std::vector<Bit>;

/// Product of the distinct minimal polynomials of alpha^1 .. alpha^(2s).
Gf2Poly bch_generator(const GaloisField& field, int s);

/// Shortened systematic narrow-sense primitive BCH code with designed
/// distance 2s+1, used as the pre-code h: {0,1}^k -> {0,1}^n0.
///
/// A message x maps to (x, p) where (0^(kprime-k), x, p) is a codeword of the
/// full-length code. Position i of a length-n0 word carries the coefficient of
/// x^(n0-1-i).
class BchCode {
 public:
  /// Syndrome: s field elements (evaluations at alpha^1, alpha^3, ...,
  /// alpha^(2s-1)) packed m bits each.
  using Syndrome = std::uint64_t;

  /// Smallest m in [3, 16] whose code has dimension >= k and shortened length
  /// n0 > 2s+1.
  static BchCode select(std::size_t k, int s);

  BchCode(std::size_t k, int s, int m);

  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] int s() const noexcept { return s_; }
  [[nodiscard]] int m() const noexcept { return field_->m(); }
  [[nodiscard]] std::uint32_t primitive_poly() const noexcept { return field_->primitive_poly(); }
  [[nodiscard]] std::size_t full_length() const noexcept { return field_->order(); }
  [[nodiscard]] std::size_t kprime() const noexcept { return kprime_; }
  [[nodiscard]] std::size_t n0() const noexcept { return n0_; }
  [[nodiscard]] const Gf2Poly& generator() const noexcept { return generator_; }
  [[nodiscard]] const GaloisField& field() const noexcept { return *field_; }

  [[nodiscard]] BitString encode(const BitString& x) const;
  [[nodiscard]] bool is_codeword(const BitString& c) const;
  [[nodiscard]] std::optional<BitString> bounded_decode(const BitString& z) const;
  [[nodiscard]] std::optional<BitString> bounded_decode(const BitString& z, int max_errors) const;
  /// First k symbols of a codeword; throws std::invalid_argument otherwise.
  [[nodiscard]] BitString extract_info(const BitString& c) const;

  [[nodiscard]] Syndrome syndrome(std::span<const Bit> word) const;
  [[nodiscard]] Syndrome column(std::size_t pos) const { return columns_.at(pos); }
  [[nodiscard]] std::span<const Syndrome> columns() const noexcept { return columns_; }
  /// Error positions of the unique pattern of weight <= s with this syndrome,
  /// or nullopt.
  [[nodiscard]] std::optional<std::span<const std::uint16_t>> error_pattern(Syndrome syn) const;

 private:
  struct DecodeTable;

  std::size_t k_;
  int s_;
  std::shared_ptr<const GaloisField> field_;
  Gf2Poly generator_;
  std::size_t kprime_ = 0;
  std::size_t n0_ = 0;
  std::vector<Syndrome> columns_;
  std::shared_ptr<const DecodeTable> table_;
};

/// Generator coefficients, highest degree first, as a '0'/'1' string.
std::string poly_string(const Gf2Poly& p);

}  // namespace delsub
