#include "delsub/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "delsub/errors.hpp"
#include "delsub/simd/kernels.hpp"

namespace delsub::oracle {

namespace {

void check_pair(const BitString& x, const BitString& other) {
  if (x.size() != other.size()) throw std::invalid_argument("oracle: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("oracle: length must be at least 2");
}

std::vector<BitString> distinct_deletions(const BitString& x) {
  BitSet out;
  for (std::size_t i = 0; i < x.size(); ++i) out.insert(delete_at(x, i));
  return {out.begin(), out.end()};
}

BitString from_index(std::uint64_t v, std::size_t n) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (((v >> (n - 1 - i)) & 1U) != 0U) x.set(i, 1);
  }
  return x;
}

void check_sieve_size(std::size_t n, std::size_t max_n) {
  if (n > max_n || n > 32) {
    throw std::invalid_argument("sieve: 2^" + std::to_string(n) +
                                " strings exceeds the enumeration limit 2^" + std::to_string(max_n));
  }
}

struct Keyed {
  BigInt key;
  std::uint32_t index;
};

// (packed checksum, string index) for every string of length n, sorted.
std::vector<Keyed> keyed_strings(std::size_t n, int s) {
  const ChecksumParams params(n, s);
  const std::uint64_t total = 1ULL << n;
  std::vector<Keyed> keyed;
  keyed.reserve(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    keyed.push_back({pack_value(f_checksum(from_index(v, n), params), params),
                     static_cast<std::uint32_t>(v)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.index < b.index;
  });
  return keyed;
}

}  // namespace

bool balls_intersect(const BitString& x, const BitString& other, int s) {
  check_pair(x, other);
  const BitSet a = ball_down(x, s);
  const BitSet b = ball_down(other, s);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

bool balls_intersect_remark1(const BitString& x, const BitString& other, int s) {
  check_pair(x, other);
  const auto limit = static_cast<std::size_t>(2 * s);
  const auto& k = simd::kernels();
  const auto dx = distinct_deletions(x);
  const auto dy = distinct_deletions(other);
  for (const BitString& a : dx) {
    for (const BitString& b : dy) {
      if (k.hamming(a.bits().data(), b.bits().data(), a.size()) <= limit) return true;
    }
  }
  return false;
}

CodeCheck verify_code(std::span<const BitString> codebook, int s) {
  CodeCheck out;
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    if (codebook[i].size() != codebook.front().size()) {
      throw std::invalid_argument("verify_code: members differ in length");
    }
    for (std::size_t j = i + 1; j < codebook.size(); ++j) {
      ++out.pairs_checked;
      if (balls_intersect_remark1(codebook[i], codebook[j], s)) {
        out.ok = false;
        out.witness = std::make_pair(codebook[i], codebook[j]);
        return out;
      }
    }
  }
  return out;
}

std::vector<SieveCode> sieve_buckets(std::size_t n, int s, std::size_t max_n) {
  check_sieve_size(n, max_n);
  const ChecksumParams params(n, s);
  const auto keyed = keyed_strings(n, s);
  std::vector<SieveCode> buckets;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    SieveCode code{n, s, unpack(keyed[i].key, params), {}};
    while (j < keyed.size() && keyed[j].key == keyed[i].key) {
      code.codebook.push_back(from_index(keyed[j].index, n));
      ++j;
    }
    buckets.push_back(std::move(code));
    i = j;
  }
  return buckets;
}

SieveResult sieve_cr(std::size_t n, int s, std::size_t max_n) {
  auto buckets = sieve_buckets(n, s, max_n);
  SieveResult out;
  out.total_strings = std::size_t{1} << n;
  out.nonempty_buckets = buckets.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    out.bucket_sizes.push_back(buckets[i].codebook.size());
    if (buckets[i].codebook.size() > buckets[best].codebook.size()) best = i;
  }
  out.best = std::move(buckets[best]);
  return out;
}

BitString decode_cr(const BitString& y, const SieveCode& code) {
  if (y.size() + 1 != code.n) throw std::invalid_argument("decode_cr: word must have length n - 1");
  const ChecksumParams params(code.n, code.s);
  std::vector<BitString> survivors;
  for (const BitString& z : up_candidates(y, code.s)) {
    if (f_checksum(z, params) == code.residue &&
        std::binary_search(code.codebook.begin(), code.codebook.end(), z)) {
      survivors.push_back(z);
    }
  }
  if (survivors.empty()) throw DecodeError(DecodeStage::checksum, "no codeword of the sieve code fits");
  if (survivors.size() > 1) throw InvariantViolation("decode_cr: several codewords fit one word");
  return survivors.front();
}

Lemma3Report verify_lemma3(std::size_t length, int s, std::size_t max_n) {
  check_sieve_size(length, max_n);
  Lemma3Report report;
  report.length = length;
  report.s = s;
  report.strings = std::size_t{1} << length;
  const auto keyed = keyed_strings(length, s);
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].key == keyed[i].key) ++j;
    ++report.buckets;
    for (std::size_t a = i; a < j; ++a) {
      const BitString x = from_index(keyed[a].index, length);
      for (std::size_t b = a + 1; b < j; ++b) {
        const BitString other = from_index(keyed[b].index, length);
        ++report.pairs_checked;
        if (balls_intersect_remark1(x, other, s)) {
          if (report.violations++ == 0) report.witness = std::make_pair(x, other);
        }
      }
    }
    i = j;
  }
  return report;
}

}  // namespace delsub::oracle
