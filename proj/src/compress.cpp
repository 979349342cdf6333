#include "delsub/compress.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "delsub/errors.hpp"

namespace delsub {

std::size_t tag_field_width(std::size_t n0, int s) {
  const double bits = (s + 2.0) * std::log2(static_cast<double>(n0));
  return static_cast<std::size_t>(std::ceil(bits)) + 8;
}

namespace {

// Exact divisibility by a fixed divisor: with p = 2^t q, q odd, d is a multiple
// of p iff its low t bits are clear and (d >> t) * q^-1 mod 2^64 <= (2^64-1)/q.
struct Divisor {
  explicit Divisor(std::uint64_t p) : shift(static_cast<unsigned>(__builtin_ctzll(p))) {
    const std::uint64_t q = p >> shift;
    inverse = q;  // Newton iteration doubles the correct low bits each step
    for (int i = 0; i < 5; ++i) inverse *= 2 - q * inverse;
    bound = ~std::uint64_t{0} / q;
    low_mask = (std::uint64_t{1} << shift) - 1;
  }
  [[nodiscard]] bool divides(std::uint64_t d) const noexcept {
    return (d & low_mask) == 0 && (d >> shift) * inverse <= bound;
  }
  unsigned shift;
  std::uint64_t inverse = 0;
  std::uint64_t bound = 0;
  std::uint64_t low_mask = 0;
};

const BigInt kWordMax = BigInt(~std::uint64_t{0});

// Open-addressing set of fixed-width bit rows packed 64 per word.
class RowSet {
 public:
  explicit RowSet(std::size_t words) : words_(words) { rehash(1024); }

  void insert(const std::uint64_t* row) {
    if (2 * (size_ + 1) > slots_) rehash(2 * slots_);
    place(row);
  }

  [[nodiscard]] std::vector<BitString> rows(std::size_t bits) const {
    std::vector<BitString> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < slots_; ++i) {
      if (used_[i] == 0) continue;
      const std::uint64_t* row = &data_[i * words_];
      BitString x(bits);
      for (std::size_t b = 0; b < bits; ++b) x.set(b, static_cast<Bit>((row[b / 64] >> (b % 64)) & 1U));
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  [[nodiscard]] std::size_t hash(const std::uint64_t* row) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < words_; ++w) {
      h ^= row[w];
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 32;
    }
    return static_cast<std::size_t>(h) & (slots_ - 1);
  }

  void place(const std::uint64_t* row) {
    for (std::size_t i = hash(row);; i = (i + 1) & (slots_ - 1)) {
      std::uint64_t* slot = &data_[i * words_];
      if (used_[i] == 0) {
        std::copy(row, row + words_, slot);
        used_[i] = 1;
        ++size_;
        return;
      }
      if (std::equal(row, row + words_, slot)) return;
    }
  }

  void rehash(std::size_t slots) {
    std::vector<std::uint64_t> old_data = std::move(data_);
    std::vector<std::uint8_t> old_used = std::move(used_);
    const std::size_t old_slots = slots_;
    slots_ = slots;
    size_ = 0;
    data_.assign(slots_ * words_, 0);
    used_.assign(slots_, 0);
    for (std::size_t i = 0; i < old_slots; ++i) {
      if (old_used[i] != 0) place(&old_data[i * words_]);
    }
  }

  std::size_t words_;
  std::size_t slots_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

BigInt smallest_non_divisor(std::span<const BigInt> values, const BigInt& limit) {
  const bool words = limit <= kWordMax &&
                     std::all_of(values.begin(), values.end(), [](const BigInt& v) { return v <= kWordMax; });
  if (words) {
    std::vector<std::uint64_t> d;
    d.reserve(values.size());
    for (const BigInt& v : values) d.push_back(v.convert_to<std::uint64_t>());
    const auto cap = limit.convert_to<std::uint64_t>();
    for (std::uint64_t p = 1; p < cap; ++p) {
      const Divisor div(p);
      const auto hit = std::find_if(d.begin(), d.end(), [&div](std::uint64_t v) { return div.divides(v); });
      if (hit == d.end()) return BigInt(p);
    }
    throw WidthExceeded("modulus search reached the tag field limit " + limit.str());
  }
  for (unsigned long long p = 1;; ++p) {
    if (BigInt(p) >= limit) {
      throw WidthExceeded("modulus search reached the tag field limit " + limit.str());
    }
    const bool separates = std::none_of(values.begin(), values.end(), [p](const BigInt& v) {
      return boost::multiprecision::integer_modulus(v, p) == 0;
    });
    if (separates) return BigInt(p);
  }
}

SyndromeCompressor::SyndromeCompressor(BchCode code)
    : code_(std::move(code)),
      checksum_(code_.n0(), code_.s()),
      width_(tag_field_width(code_.n0(), code_.s())) {}

BigInt SyndromeCompressor::packed_checksum(const BitString& c) const {
  return pack_value(f_checksum(c, checksum_), checksum_);
}

Neighborhood SyndromeCompressor::neighborhood(const BitString& c) const {
  if (c.size() != code_.n0() || !code_.is_codeword(c)) {
    throw std::invalid_argument("neighborhood: center is not a codeword");
  }
  const std::size_t n = code_.n0();
  const auto budget = static_cast<std::size_t>(code_.s());
  const auto cols = code_.columns();

  const std::size_t words = (n + 63) / 64;
  RowSet found(words);
  std::vector<Bit> z(n);
  std::vector<std::uint64_t> packed(words);
  std::vector<std::uint64_t> cand(words);
  std::vector<std::size_t> flips;
  std::size_t inserted = 0;

  auto toggle = [&cand](std::size_t p) { cand[p / 64] ^= std::uint64_t{1} << (p % 64); };

  auto visit = [&](BchCode::Syndrome syn) {
    const auto pattern = code_.error_pattern(syn);
    if (!pattern) return;
    cand = packed;
    for (std::size_t p : flips) toggle(p);
    for (std::uint16_t p : *pattern) toggle(p);
    found.insert(cand.data());
  };

  auto walk = [&](auto&& self, BchCode::Syndrome syn, std::size_t start) -> void {
    visit(syn);
    if (flips.size() == budget) return;
    for (std::size_t p = start; p < n; ++p) {
      if (p == inserted) continue;
      flips.push_back(p);
      self(self, syn ^ cols[p], p + 1);
      flips.pop_back();
    }
  };

  for (std::size_t del = 0; del < n; ++del) {
    // deleting anywhere inside a run gives the same word; take the run's last symbol
    if (del + 1 < n && c[del] == c[del + 1]) continue;
    const BitString y = delete_at(c, del);
    for (std::size_t ins = 0; ins < n; ++ins) {
      for (Bit b = 0; b <= 1; ++b) {
        if (ins > 0 && y[ins - 1] == b) continue;
        std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(ins), z.begin());
        z[ins] = b;
        std::copy(y.begin() + static_cast<std::ptrdiff_t>(ins), y.end(),
                  z.begin() + static_cast<std::ptrdiff_t>(ins) + 1);
        std::fill(packed.begin(), packed.end(), 0);
        for (std::size_t i = 0; i < n; ++i) packed[i / 64] |= std::uint64_t{z[i]} << (i % 64);
        inserted = ins;
        walk(walk, code_.syndrome(z), 0);
      }
    }
  }

  Neighborhood out{c, found.rows(n)};
  std::sort(out.members.begin(), out.members.end());
  return out;
}

BigInt SyndromeCompressor::find_modulus(const BitString& c, const Neighborhood& nbhd) const {
  if (nbhd.center != c) throw std::invalid_argument("find_modulus: neighborhood has another center");
  const BigInt own = packed_checksum(c);
  std::vector<BigInt> diffs;
  diffs.reserve(nbhd.members.size());
  for (const BitString& other : nbhd.members) {
    if (other == c) continue;
    BigInt d = packed_checksum(other) - own;
    if (d == 0) {
      throw InvariantViolation("find_modulus: neighbors " + c.str() + " and " + other.str() +
                               " share a checksum");
    }
    diffs.push_back(boost::multiprecision::abs(d));
  }
  return smallest_non_divisor(diffs, BigInt(1) << width_);
}

SyndromeTag SyndromeCompressor::tag(const BitString& c) const {
  SyndromeTag t;
  t.modulus = find_modulus(c, neighborhood(c));
  t.residue = packed_checksum(c) % t.modulus;
  t.field_width = width_;
  t.packed = to_bits(t.residue, width_);
  t.packed.append(to_bits(t.modulus, width_));
  return t;
}

SyndromeTag SyndromeCompressor::parse_tag(const BitString& packed) const {
  if (packed.size() != tag_length()) throw std::invalid_argument("parse_tag: length mismatch");
  SyndromeTag t;
  t.field_width = width_;
  t.residue = from_bits(packed.bits().subspan(0, width_));
  t.modulus = from_bits(packed.bits().subspan(width_, width_));
  if (t.modulus == 0 || t.residue >= t.modulus) {
    throw DecodeError(DecodeStage::syndrome_tag, "malformed tag");
  }
  t.packed = packed;
  return t;
}

BitString SyndromeCompressor::recover(const BitString& y1, const SyndromeTag& tag) const {
  const std::size_t n = code_.n0();
  if (y1.size() + 1 != n) throw std::invalid_argument("recover: word must have length n0 - 1");
  if (tag.modulus <= 0) throw std::invalid_argument("recover: modulus must be positive");

  // Codewords among up_candidates(y1, s) are exactly the codewords within
  // distance s of some single insertion into y1, and the bounded decoder finds
  // the only such codeword per insertion.
  std::set<BitString> survivors;
  for (std::size_t ins = 0; ins < n; ++ins) {
    for (Bit b = 0; b <= 1; ++b) {
      if (ins > 0 && y1[ins - 1] == b) continue;
      const auto c = code_.bounded_decode(insert_at(y1, ins, b));
      if (!c || survivors.count(*c) != 0U) continue;
      if (packed_checksum(*c) % tag.modulus == tag.residue) survivors.insert(*c);
    }
  }
  if (survivors.empty()) throw DecodeError(DecodeStage::syndrome_tag, "no codeword matches the tag");
  if (survivors.size() > 1) {
    throw InvariantViolation("recover: " + std::to_string(survivors.size()) +
                             " distinct codewords match one tag");
  }
  return *survivors.begin();
}

}  // namespace delsub
