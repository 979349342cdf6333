#include "delsub/precode.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace delsub {

namespace {

// Minimal-weight primitive polynomials, m = 3..16.
constexpr std::array<std::uint32_t, 14> kPrimitive = {
    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,  0x211,
    0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  }
  return out;
}

}  // namespace

std::uint32_t default_primitive_poly(int m) {
  if (m < 3 || m > 16) throw std::out_of_range("no primitive polynomial table entry for this m");
  return kPrimitive[static_cast<std::size_t>(m - 3)];
}

GaloisField::GaloisField(int m) : GaloisField(m, default_primitive_poly(m)) {}

GaloisField::GaloisField(int m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly), order_((1U << m) - 1) {
  if (m < 2 || m > 24) throw std::out_of_range("GaloisField: unsupported extension degree");
  if ((primitive_poly >> m) != 1U) throw std::invalid_argument("GaloisField: polynomial degree != m");
  exp_.resize(order_);
  log_.assign(order_ + 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (i > 0 && x == 1) throw std::invalid_argument("GaloisField: polynomial is not primitive");
    exp_[i] = x;
    log_[x] = i;
    x <<= 1;
    if ((x >> m) != 0U) x ^= primitive_poly;
  }
  if (x != 1) throw std::invalid_argument("GaloisField: polynomial is not primitive");
}

std::uint32_t GaloisField::log(std::uint32_t x) const {
  if (x == 0 || x > order_) throw std::domain_error("GaloisField: log of zero");
  return log_[x];
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % order_];
}

Gf2Poly bch_generator(const GaloisField& field, int s) {
  const std::uint32_t n = field.order();
  std::set<std::uint32_t> covered;
  Gf2Poly g{1};
  for (std::uint32_t i = 1; i <= static_cast<std::uint32_t>(2 * s); ++i) {
    const std::uint32_t root = i % n;
    if (covered.count(root) != 0U) continue;
    // cyclotomic coset of root under doubling
    std::vector<std::uint32_t> coset;
    std::uint32_t e = root;
    do {
      coset.push_back(e);
      covered.insert(e);
      e = static_cast<std::uint32_t>((2ULL * e) % n);
    } while (e != root);

    // minimal polynomial prod (x + alpha^e) over GF(2^m)
    std::vector<std::uint32_t> mp{1};
    for (std::uint32_t c : coset) {
      const std::uint32_t a = field.exp(c);
      std::vector<std::uint32_t> next(mp.size() + 1, 0);
      for (std::size_t d = 0; d < mp.size(); ++d) {
        next[d + 1] ^= mp[d];
        next[d] ^= field.mul(mp[d], a);
      }
      mp = std::move(next);
    }
    Gf2Poly binary;
    binary.reserve(mp.size());
    for (std::uint32_t coef : mp) {
      if (coef > 1) throw std::logic_error("minimal polynomial has non-binary coefficient");
      binary.push_back(static_cast<Bit>(coef));
    }
    g = gf2_mul(g, binary);
  }
  return g;
}

struct BchCode::DecodeTable {
  std::unordered_map<Syndrome, std::uint32_t> index;  // syndrome -> entry
  std::vector<std::uint32_t> offsets;                 // entry -> start in positions
  std::vector<std::uint16_t> positions;
};

BchCode BchCode::select(std::size_t k, int s) {
  if (k < 1) throw std::invalid_argument("BchCode::select: k must be >= 1");
  if (s < 1) throw std::invalid_argument("BchCode::select: s must be >= 1");
  for (int m = 3; m <= 16; ++m) {
    const GaloisField field(m);
    const std::size_t degree = bch_generator(field, s).size() - 1;
    if (degree >= field.order()) continue;
    const std::size_t kprime = field.order() - degree;
    if (kprime < k) continue;
    const std::size_t n0 = k + degree;
    if (n0 <= static_cast<std::size_t>(2 * s + 1)) continue;
    return BchCode(k, s, m);
  }
  throw std::invalid_argument("BchCode::select: message too long for m <= 16");
}

BchCode::BchCode(std::size_t k, int s, int m)
    : k_(k), s_(s), field_(std::make_shared<const GaloisField>(m)) {
  if (k < 1 || s < 1) throw std::invalid_argument("BchCode: k and s must be >= 1");
  generator_ = bch_generator(*field_, s);
  const std::size_t degree = generator_.size() - 1;
  if (degree >= field_->order()) throw std::invalid_argument("BchCode: code is trivial");
  kprime_ = field_->order() - degree;
  if (kprime_ < k) throw std::invalid_argument("BchCode: dimension smaller than k");
  n0_ = k + degree;
  if (static_cast<std::size_t>(s) * static_cast<std::size_t>(m) > 64) {
    throw std::invalid_argument("BchCode: syndrome exceeds 64 bits");
  }

  // column of position i: (alpha^(t * (n0-1-i)))_{t = 1,3,..,2s-1}
  columns_.resize(n0_);
  for (std::size_t i = 0; i < n0_; ++i) {
    const std::uint64_t deg = n0_ - 1 - i;
    Syndrome col = 0;
    for (int t = 0; t < s; ++t) {
      const std::uint64_t root = 2ULL * static_cast<std::uint64_t>(t) + 1;
      col |= static_cast<Syndrome>(field_->exp(root * deg)) << (static_cast<unsigned>(t * m));
    }
    columns_[i] = col;
  }

  auto table = std::make_shared<DecodeTable>();
  for_each_subset(n0_, static_cast<std::size_t>(s), [&](std::span<const std::size_t> err) {
    Syndrome syn = 0;
    for (std::size_t p : err) syn ^= columns_[p];
    const auto entry = static_cast<std::uint32_t>(table->offsets.size());
    if (!table->index.emplace(syn, entry).second) {
      throw std::logic_error("BchCode: two correctable patterns share a syndrome");
    }
    table->offsets.push_back(static_cast<std::uint32_t>(table->positions.size()));
    for (std::size_t p : err) table->positions.push_back(static_cast<std::uint16_t>(p));
  });
  table->offsets.push_back(static_cast<std::uint32_t>(table->positions.size()));
  table_ = std::move(table);
}

BitString BchCode::encode(const BitString& x) const {
  if (x.size() != k_) throw std::invalid_argument("BchCode::encode: length mismatch");
  const std::size_t r = generator_.size() - 1;
  // remainder of x(X) * X^r mod g(X); leading zero padding does not change it
  std::vector<Bit> reg(r, 0);  // reg[d] = coefficient of X^d
  for (Bit b : x) {
    const Bit feedback = static_cast<Bit>(b ^ reg[r - 1]);
    for (std::size_t d = r - 1; d > 0; --d) reg[d] = static_cast<Bit>(reg[d - 1] ^ (feedback & generator_[d]));
    reg[0] = static_cast<Bit>(feedback & generator_[0]);
  }
  BitString out = x;
  for (std::size_t d = r; d > 0; --d) out.push_back(reg[d - 1]);
  return out;
}

BchCode::Syndrome BchCode::syndrome(std::span<const Bit> word) const {
  if (word.size() != n0_) throw std::invalid_argument("BchCode::syndrome: length mismatch");
  Syndrome syn = 0;
  for (std::size_t i = 0; i < n0_; ++i) {
    if (word[i] != 0) syn ^= columns_[i];
  }
  return syn;
}

bool BchCode::is_codeword(const BitString& c) const { return syndrome(c.bits()) == 0; }

std::optional<std::span<const std::uint16_t>> BchCode::error_pattern(Syndrome syn) const {
  const auto it = table_->index.find(syn);
  if (it == table_->index.end()) return std::nullopt;
  const std::uint32_t begin = table_->offsets[it->second];
  const std::uint32_t end = table_->offsets[it->second + 1];
  return std::span<const std::uint16_t>(table_->positions.data() + begin, end - begin);
}

std::optional<BitString> BchCode::bounded_decode(const BitString& z) const {
  return bounded_decode(z, s_);
}

std::optional<BitString> BchCode::bounded_decode(const BitString& z, int max_errors) const {
  if (z.size() != n0_) throw std::invalid_argument("BchCode::bounded_decode: length mismatch");
  if (max_errors < 0 || max_errors > s_) {
    throw std::invalid_argument("BchCode::bounded_decode: budget outside [0, s]");
  }
  const auto pattern = error_pattern(syndrome(z.bits()));
  if (!pattern || pattern->size() > static_cast<std::size_t>(max_errors)) return std::nullopt;
  BitString c = z;
  for (std::uint16_t p : *pattern) c.flip(p);
  return c;
}

BitString BchCode::extract_info(const BitString& c) const {
  if (c.size() != n0_ || !is_codeword(c)) {
    throw std::invalid_argument("BchCode::extract_info: not a codeword");
  }
  return c.slice(0, k_);
}

std::string poly_string(const Gf2Poly& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  return out;
}

}  // namespace delsub
