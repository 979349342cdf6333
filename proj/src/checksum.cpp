#include "delsub/checksum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "delsub/simd/kernels.hpp"

namespace delsub {

namespace {

const BigInt kWordLimit = BigInt(std::numeric_limits<std::uint64_t>::max());

}  // namespace

std::vector<BigInt> weight_vector(int order, std::size_t length) {
  if (order < 1) throw std::invalid_argument("weight_vector: order must be >= 1");
  std::vector<BigInt> out;
  out.reserve(length);
  BigInt acc = 0;
  for (std::size_t l = 1; l <= length; ++l) {
    acc += boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(order - 1));
    out.push_back(acc);
  }
  return out;
}

ChecksumParams::ChecksumParams(std::size_t length, int s) : length_(length), s_(s) {
  if (s < 1) throw std::invalid_argument("ChecksumParams: s must be >= 1");
  if (length <= static_cast<std::size_t>(2 * s + 1)) {
    throw std::invalid_argument("ChecksumParams: block length must exceed 2s+1");
  }
  const int comps = components();
  BigInt power = 1;
  range_ = 1;
  BigInt largest_sum = 0;
  for (int j = 1; j <= comps; ++j) {
    power *= length;
    place_values_.push_back(range_);
    moduli_.push_back(BigInt(comps) * power);
    range_ *= moduli_.back();
    weights_.push_back(weight_vector(j, length));
    BigInt total = 0;
    for (const BigInt& w : weights_.back()) total += w;
    if (total > largest_sum) largest_sum = total;
  }
  packed_width_ = boost::multiprecision::msb(BigInt(range_ - 1)) + 1;

  word_sized_ = largest_sum <= kWordLimit && moduli_.back() <= kWordLimit;
  if (word_sized_) {
    for (int j = 1; j <= comps; ++j) {
      std::vector<std::uint64_t> w;
      w.reserve(length);
      for (const BigInt& v : weights_[j - 1]) w.push_back(v.convert_to<std::uint64_t>());
      weights_u64_.push_back(std::move(w));
      moduli_u64_.push_back(moduli_[j - 1].convert_to<std::uint64_t>());
    }
  }
}

void ChecksumParams::check_order(int j) const {
  if (j < 1 || j > components()) throw std::out_of_range("checksum component out of range");
}

const BigInt& ChecksumParams::modulus(int j) const {
  check_order(j);
  return moduli_[j - 1];
}

const BigInt& ChecksumParams::place_value(int j) const {
  check_order(j);
  return place_values_[j - 1];
}

const std::vector<BigInt>& ChecksumParams::weights(int j) const {
  check_order(j);
  return weights_[j - 1];
}

double ChecksumParams::xi() const noexcept {
  const double c = 2.0 * s_ + 1.0;
  return (s_ + 1.0) * c * std::log2(static_cast<double>(length_)) + c * std::log2(c);
}

const std::vector<std::uint64_t>& ChecksumParams::weights_u64(int j) const {
  check_order(j);
  if (!word_sized_) throw std::logic_error("checksum weights exceed 64 bits");
  return weights_u64_[j - 1];
}

std::uint64_t ChecksumParams::modulus_u64(int j) const {
  check_order(j);
  if (!word_sized_) throw std::logic_error("checksum moduli exceed 64 bits");
  return moduli_u64_[j - 1];
}

ChecksumParams ChecksumParams::with_wide_arithmetic() const {
  ChecksumParams copy = *this;
  copy.word_sized_ = false;
  copy.weights_u64_.clear();
  copy.moduli_u64_.clear();
  return copy;
}

Checksum f_checksum(const BitString& x, const ChecksumParams& params) {
  if (x.size() != params.length()) throw std::invalid_argument("f_checksum: length mismatch");
  Checksum out;
  out.r.reserve(static_cast<std::size_t>(params.components()));
  if (params.word_sized()) {
    const auto& k = simd::kernels();
    for (int j = 1; j <= params.components(); ++j) {
      const std::uint64_t dot = k.masked_sum(x.bits().data(), params.weights_u64(j).data(), x.size());
      out.r.emplace_back(dot % params.modulus_u64(j));
    }
    return out;
  }
  for (int j = 1; j <= params.components(); ++j) {
    const auto& w = params.weights(j);
    BigInt dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) dot += w[i];
    }
    out.r.push_back(dot % params.modulus(j));
  }
  return out;
}

BigInt pack_value(const Checksum& r, const ChecksumParams& params) {
  if (r.r.size() != static_cast<std::size_t>(params.components())) {
    throw std::invalid_argument("pack: wrong number of components");
  }
  BigInt value = 0;
  for (int j = 1; j <= params.components(); ++j) {
    const BigInt& rj = r.r[static_cast<std::size_t>(j - 1)];
    if (rj < 0 || rj >= params.modulus(j)) throw std::out_of_range("pack: component out of range");
    value += rj * params.place_value(j);
  }
  return value;
}

BitString pack_bits(const Checksum& r, const ChecksumParams& params) {
  return to_bits(pack_value(r, params), params.packed_width());
}

Checksum unpack(const BigInt& value, const ChecksumParams& params) {
  if (value < 0 || value >= params.range()) throw std::out_of_range("unpack: value out of range");
  Checksum out;
  BigInt rest = value;
  for (int j = 1; j <= params.components(); ++j) {
    BigInt q;
    BigInt rem;
    boost::multiprecision::divide_qr(rest, params.modulus(j), q, rem);
    out.r.push_back(rem);
    rest = q;
  }
  return out;
}

Checksum unpack(const BitString& bits, const ChecksumParams& params) {
  if (bits.size() != params.packed_width()) throw std::invalid_argument("unpack: width mismatch");
  return unpack(from_bits(bits), params);
}

BitString to_bits(const BigInt& value, std::size_t width) {
  if (value < 0) throw std::out_of_range("to_bits: negative value");
  if (value != 0 && boost::multiprecision::msb(value) >= width) {
    throw std::out_of_range("to_bits: value does not fit in width");
  }
  BitString out(width);
  for (std::size_t i = 0; i < width; ++i) {
    if (boost::multiprecision::bit_test(value, static_cast<unsigned>(width - 1 - i))) out.set(i, 1);
  }
  return out;
}

BigInt from_bits(std::span<const Bit> bits) {
  BigInt value = 0;
  for (Bit b : bits) {
    value <<= 1;
    if (b != 0) value |= 1;
  }
  return value;
}

BigInt from_bits(const BitString& bits) { return from_bits(bits.bits()); }

namespace {

// Word-sized filter. For each distinct insertion z' of y, evaluate the inner
// products once, then walk flip sets (excluding the inserted position) while
// patching the sums by +/- weight. Unsigned wraparound is exact because the
// true sums are non-negative and below 2^64.
std::vector<BitString> survivors_word(const BitString& y, const Checksum& target,
                                      const ChecksumParams& params) {
  const int comps = params.components();
  const auto budget = static_cast<std::size_t>(params.s());
  const std::size_t len = params.length();
  const auto& k = simd::kernels();

  std::vector<const std::uint64_t*> w(static_cast<std::size_t>(comps));
  std::vector<std::uint64_t> mod(static_cast<std::size_t>(comps));
  std::vector<std::uint64_t> want(static_cast<std::size_t>(comps));
  for (int j = 1; j <= comps; ++j) {
    const auto c = static_cast<std::size_t>(j - 1);
    w[c] = params.weights_u64(j).data();
    mod[c] = params.modulus_u64(j);
    if (target.r.at(c) >= params.modulus(j)) return {};
    want[c] = target.r[c].convert_to<std::uint64_t>();
  }

  BitSet found;
  std::vector<Bit> z(len);
  // acc[level * comps + c]
  std::vector<std::uint64_t> acc((budget + 1) * static_cast<std::size_t>(comps));
  std::vector<std::size_t> flips;

  auto matches = [&](const std::uint64_t* sums) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(comps); ++c) {
      if (sums[c] % mod[c] != want[c]) return false;
    }
    return true;
  };

  auto record = [&]() {
    std::vector<Bit> out = z;
    for (std::size_t p : flips) out[p] ^= 1U;
    found.insert(BitString(std::move(out)));
  };

  std::size_t inserted = 0;
  // depth-first over increasing flip positions
  auto walk = [&](auto&& self, std::size_t level, std::size_t start) -> void {
    const std::uint64_t* cur = acc.data() + level * static_cast<std::size_t>(comps);
    if (matches(cur)) record();
    if (level == budget) return;
    std::uint64_t* next = acc.data() + (level + 1) * static_cast<std::size_t>(comps);
    for (std::size_t p = start; p < len; ++p) {
      if (p == inserted) continue;
      for (std::size_t c = 0; c < static_cast<std::size_t>(comps); ++c) {
        next[c] = z[p] != 0 ? cur[c] - w[c][p] : cur[c] + w[c][p];
      }
      flips.push_back(p);
      self(self, level + 1, p + 1);
      flips.pop_back();
    }
  };

  for (std::size_t i = 0; i < len; ++i) {
    for (Bit b = 0; b <= 1; ++b) {
      // inserting b just after another b gives the same word as inserting it before
      if (i > 0 && y[i - 1] == b) continue;
      std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(i), z.begin());
      z[i] = b;
      std::copy(y.begin() + static_cast<std::ptrdiff_t>(i), y.end(),
                z.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      inserted = i;
      for (std::size_t c = 0; c < static_cast<std::size_t>(comps); ++c) {
        acc[c] = k.masked_sum(z.data(), w[c], len);
      }
      walk(walk, 0, 0);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<BitString> checksum_survivors(const BitString& y, const Checksum& target,
                                          const ChecksumParams& params) {
  if (y.size() + 1 != params.length()) {
    throw std::invalid_argument("checksum_survivors: word must be one shorter than the block");
  }
  if (target.r.size() != static_cast<std::size_t>(params.components())) {
    throw std::invalid_argument("checksum_survivors: wrong number of components");
  }
  if (params.word_sized()) return survivors_word(y, target, params);

  std::vector<BitString> out;
  for (const BitString& z : up_candidates(y, params.s())) {
    if (f_checksum(z, params) == target) out.push_back(z);
  }
  return out;
}

}  // namespace delsub
