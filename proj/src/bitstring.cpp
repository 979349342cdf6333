#include "delsub/bitstring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "delsub/simd/kernels.hpp"

namespace delsub {

namespace {

void check_bit(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("bit value must be 0 or 1");
}

}  // namespace

BitString::BitString(std::size_t length, Bit fill) : bits_(length, fill) { check_bit(fill); }

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    check_bit(b);
    bits_.push_back(static_cast<Bit>(b));
  }
}

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) check_bit(b);
}

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    bits.push_back(static_cast<Bit>(ch - '0'));
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

std::string BitString::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

Bit BitString::at(std::size_t i) const { return bits_.at(i); }

void BitString::set(std::size_t i, Bit b) {
  check_bit(b);
  bits_.at(i) = b;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos > bits_.size() || len > bits_.size() - pos) throw std::out_of_range("slice out of range");
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

BitString& BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  return *this;
}

void BitString::push_back(Bit b) {
  check_bit(b);
  bits_.push_back(b);
}

std::size_t BitString::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

std::size_t BitStringHash::operator()(const BitString& x) const noexcept {
  // FNV-1a over the symbols, length folded in.
  std::uint64_t h = 1469598103934665603ULL ^ x.size();
  for (Bit b : x.bits()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

BitString delete_at(const BitString& x, std::size_t i) {
  if (i >= x.size()) throw std::out_of_range("delete_at: position out of range");
  std::vector<Bit> out;
  out.reserve(x.size() - 1);
  out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
  return BitString(std::move(out));
}

BitString insert_at(const BitString& x, std::size_t i, Bit b) {
  if (i > x.size()) throw std::out_of_range("insert_at: position out of range");
  check_bit(b);
  std::vector<Bit> out;
  out.reserve(x.size() + 1);
  out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(b);
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  return BitString(std::move(out));
}

BitString substitute(const BitString& x, std::span<const std::size_t> positions) {
  BitString out = x;
  std::vector<std::size_t> seen(positions.begin(), positions.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("substitute: duplicate position");
  }
  for (std::size_t p : positions) {
    if (p >= x.size()) throw std::out_of_range("substitute: position out of range");
    out.flip(p);
  }
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  return simd::kernels().hamming(a.bits().data(), b.bits().data(), a.size());
}

void for_each_subset(std::size_t n, std::size_t max_size,
                     const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    idx.resize(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      fn(idx);
      // advance to the next combination in lexicographic order
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
}

BitSet ball_down(const BitString& x, int s) {
  if (x.size() < 2) throw std::invalid_argument("ball_down: length must be at least 2");
  if (s < 0) throw std::invalid_argument("ball_down: negative substitution budget");
  BitSet deletions;
  for (std::size_t i = 0; i < x.size(); ++i) deletions.insert(delete_at(x, i));

  BitSet out;
  for (const BitString& y : deletions) {
    for_each_subset(y.size(), static_cast<std::size_t>(s),
                    [&](std::span<const std::size_t> flips) { out.insert(substitute(y, flips)); });
  }
  return out;
}

BitSet up_candidates(const BitString& y, int s) {
  if (s < 0) throw std::invalid_argument("up_candidates: negative substitution budget");
  BitSet insertions;
  for (std::size_t i = 0; i <= y.size(); ++i) {
    insertions.insert(insert_at(y, i, 0));
    insertions.insert(insert_at(y, i, 1));
  }
  BitSet out;
  for (const BitString& z : insertions) {
    for_each_subset(z.size(), static_cast<std::size_t>(s),
                    [&](std::span<const std::size_t> flips) { out.insert(substitute(z, flips)); });
  }
  return out;
}

BitString corrupt(const BitString& x, int s, std::uint64_t seed) {
  if (x.size() < 2) throw std::invalid_argument("corrupt: length must be at least 2");
  if (s < 0) throw std::invalid_argument("corrupt: negative substitution budget");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_del(0, x.size() - 1);
  BitString y = delete_at(x, pick_del(rng));

  const auto max_flips = std::min<std::size_t>(static_cast<std::size_t>(s), y.size());
  std::uniform_int_distribution<std::size_t> pick_count(0, max_flips);
  const std::size_t count = pick_count(rng);

  // partial Fisher-Yates over positions
  std::vector<std::size_t> pos(y.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pos.size() - 1);
    std::swap(pos[i], pos[pick(rng)]);
    y.flip(pos[i]);
  }
  return y;
}

}  // namespace delsub
