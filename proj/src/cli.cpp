#include "delsub/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "delsub/codec.hpp"
#include "delsub/errors.hpp"

namespace delsub::cli {

namespace {

std::string format_name(Format f) { return f == Format::bin ? "bin" : "text"; }

Format parse_format(const std::string& v) {
  if (v == "text") return Format::text;
  if (v == "bin") return Format::bin;
  throw std::runtime_error("unknown format '" + v + "'");
}

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

CodewordHeader header_for(const CodecParams& p, Format format) {
  return CodewordHeader{p.k, p.s, p.code().m(), p.code().primitive_poly(), p.w_p, p.n, format};
}

// Rebuilds parameters from a header and checks they reproduce it exactly.
CodecParams params_from(const CodewordHeader& h) {
  CodecParams p = derive_params(h.k, h.s);
  const CodewordHeader expect = header_for(p, h.format);
  if (expect.m != h.m || expect.primitive_poly != h.primitive_poly || expect.w_p != h.w_p ||
      expect.n != h.n) {
    throw std::runtime_error("header does not match the parameters this build derives for k=" +
                             std::to_string(h.k) + " s=" + std::to_string(h.s));
  }
  return p;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

BitString random_message(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitString x(k);
  for (std::size_t i = 0; i < k; ++i) x.set(i, static_cast<Bit>(rng() & 1U));
  return x;
}

int verify_lemma3(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = oracle::verify_lemma3(cfg.length, cfg.s, cfg.max_n);
  out << "kind=lemma3\nL=" << r.length << "\ns=" << r.s << "\nstrings=" << r.strings
      << "\nbuckets=" << r.buckets << "\npairs_checked=" << r.pairs_checked
      << "\nviolations=" << r.violations << "\n";
  if (r.witness) out << "witness=" << r.witness->first.str() << "," << r.witness->second.str() << "\n";
  out << "wall_ms=" << std::fixed << std::setprecision(1) << elapsed_ms(start) << "\n";
  return r.violations == 0 ? 0 : 1;
}

int verify_roundtrip(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const CodecParams p = derive_params(cfg.k, cfg.s);
  std::size_t trials = 0;
  std::size_t failures = 0;
  auto check = [&](const BitString& x, const BitString& y) {
    ++trials;
    bool ok = false;
    try {
      ok = decode(y, p) == x;
    } catch (const std::exception& e) {
      if (failures == 0) err << "first failure: " << e.what() << "\n";
    }
    if (!ok) {
      if (failures == 0) out << "witness=" << x.str() << "," << y.str() << "\n";
      ++failures;
    }
  };

  if (cfg.exhaustive) {
    if (cfg.k > 20) throw std::runtime_error("exhaustive round trip needs k <= 20");
    for (std::uint64_t v = 0; v < (1ULL << cfg.k); ++v) {
      BitString x(cfg.k);
      for (std::size_t i = 0; i < cfg.k; ++i) x.set(i, static_cast<Bit>((v >> (cfg.k - 1 - i)) & 1U));
      const BitString c = encode(x, p);
      for (std::size_t del = 0; del < p.n; ++del) {
        const BitString y = delete_at(c, del);
        for_each_subset(y.size(), static_cast<std::size_t>(cfg.s),
                        [&](std::span<const std::size_t> flips) { check(x, substitute(y, flips)); });
      }
    }
  } else {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = line_seed(cfg.seed, t);
      const BitString x = random_message(cfg.k, seed);
      check(x, corrupt(encode(x, p), cfg.s, seed ^ 0x9e3779b97f4a7c15ULL));
    }
  }
  out << "kind=roundtrip\nk=" << cfg.k << "\ns=" << cfg.s << "\nn=" << p.n
      << "\nmode=" << (cfg.exhaustive ? "exhaustive" : "random") << "\ntrials=" << trials
      << "\nfailures=" << failures << "\nsuccess_rate=" << std::fixed << std::setprecision(6)
      << (trials == 0 ? 1.0 : 1.0 - static_cast<double>(failures) / static_cast<double>(trials))
      << "\nwall_ms=" << std::setprecision(1) << elapsed_ms(start) << "\n";
  return failures == 0 ? 0 : 1;
}

int verify_sieve(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = oracle::sieve_cr(cfg.length, cfg.s, cfg.max_n);
  const auto check = oracle::verify_code(r.best.codebook, cfg.s);
  const std::size_t bound = (r.total_strings + r.nonempty_buckets - 1) / r.nonempty_buckets;
  const bool pigeonhole = r.best.codebook.size() >= bound;
  out << "kind=sieve\nn=" << cfg.length << "\ns=" << cfg.s << "\nstrings=" << r.total_strings
      << "\nnonempty_buckets=" << r.nonempty_buckets << "\nlargest_bucket=" << r.best.codebook.size()
      << "\npigeonhole_bound=" << bound << "\npigeonhole_ok=" << (pigeonhole ? 1 : 0)
      << "\nredundancy_bits=" << std::fixed << std::setprecision(3)
      << static_cast<double>(cfg.length) - std::log2(static_cast<double>(r.best.codebook.size()))
      << "\nverify_code=" << (check.ok ? 1 : 0) << "\n";
  if (check.witness) {
    out << "witness=" << check.witness->first.str() << "," << check.witness->second.str() << "\n";
  }
  out << "wall_ms=" << std::setprecision(1) << elapsed_ms(start) << "\n";
  return check.ok && pigeonhole ? 0 : 1;
}

}  // namespace

void write_header(std::ostream& out, const CodewordHeader& h) {
  out << "k=" << h.k << "\ns=" << h.s << "\nm=" << h.m << "\nprimitive_poly=" << hex(h.primitive_poly)
      << "\nw_P=" << h.w_p << "\nn=" << h.n << "\nformat=" << format_name(h.format) << "\n";
}

CodewordHeader read_header(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("header: expected key=value, got '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
    if (line.compare(0, eq, "format") == 0) break;
  }
  for (const char* key : {"k", "s", "m", "primitive_poly", "w_P", "n", "format"}) {
    if (kv.count(key) == 0U) throw std::runtime_error(std::string("header: missing key ") + key);
  }
  try {
    CodewordHeader h;
    h.k = std::stoul(kv["k"]);
    h.s = std::stoi(kv["s"]);
    h.m = std::stoi(kv["m"]);
    h.primitive_poly = static_cast<std::uint32_t>(std::stoul(kv["primitive_poly"], nullptr, 0));
    h.w_p = std::stoul(kv["w_P"]);
    h.n = std::stoul(kv["n"]);
    h.format = parse_format(kv["format"]);
    return h;
  } catch (const std::logic_error&) {
    throw std::runtime_error("header: malformed numeric value");
  }
}

void write_record(std::ostream& out, const BitString& bits, Format format) {
  if (format == Format::text) {
    out << bits.str() << "\n";
    return;
  }
  const auto len = static_cast<std::uint32_t>(bits.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.put(static_cast<char>((len >> shift) & 0xFFU));
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      byte <<= 1U;
      if (i + b < bits.size()) byte |= bits[i + b];
    }
    out.put(static_cast<char>(byte));
  }
}

std::optional<BitString> read_record(std::istream& in, Format format) {
  if (format == Format::text) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return BitString::parse(line);
    }
    return std::nullopt;
  }
  unsigned char head[4];
  if (!in.read(reinterpret_cast<char*>(head), 4)) {
    if (in.gcount() == 0) return std::nullopt;
    throw std::runtime_error("bin record: truncated length prefix");
  }
  const std::uint32_t len = (std::uint32_t{head[0]} << 24U) | (std::uint32_t{head[1]} << 16U) |
                            (std::uint32_t{head[2]} << 8U) | std::uint32_t{head[3]};
  std::vector<char> bytes((len + 7) / 8);
  if (!in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw std::runtime_error("bin record: truncated payload");
  }
  BitString out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto byte = static_cast<unsigned char>(bytes[i / 8]);
    out.set(i, static_cast<Bit>((byte >> (7 - i % 8)) & 1U));
  }
  return out;
}

std::uint64_t line_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + index * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const CodecParams p = derive_params(cfg.k, cfg.s);
    const BchCode& code = p.code();
    out << "k=" << p.k << "\ns=" << p.s << "\nm=" << code.m() << "\nprimitive_poly="
        << hex(code.primitive_poly()) << "\ngenerator=" << poly_string(code.generator())
        << "\nfull_length=" << code.full_length() << "\nkprime=" << code.kprime() << "\nn0=" << p.n0
        << "\nw_P=" << p.w_p << "\nn1=" << p.n1 << "\nn2=" << p.n2 << "\nfold=" << p.fold
        << "\nn=" << p.n << "\nredundancy=" << p.redundancy() << "\nreference_redundancy="
        << std::fixed << std::setprecision(3) << p.reference_redundancy() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "params: " << e.what() << "\n";
    return 2;
  }
}

int cmd_encode(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<CodecParams> params;
  try {
    params = derive_params(cfg.k, cfg.s);
  } catch (const std::exception& e) {
    err << "encode: " << e.what() << "\n";
    return 2;
  }
  const CodecParams& p = *params;
  write_header(out, header_for(p, cfg.format));
  std::string line;
  std::size_t lineno = 0;
  int status = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      const BitString x = BitString::parse(line);
      if (x.size() != cfg.k) throw std::invalid_argument("expected " + std::to_string(cfg.k) + " bits");
      write_record(out, encode(x, p), cfg.format);
    } catch (const std::exception& e) {
      err << "line " << lineno << ": " << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}

int cmd_corrupt(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  CodewordHeader h;
  try {
    h = read_header(in);
  } catch (const std::exception& e) {
    err << "corrupt: " << e.what() << "\n";
    return 2;
  }
  write_header(out, h);
  int status = 0;
  std::uint64_t index = 0;
  while (true) {
    std::optional<BitString> c;
    try {
      c = read_record(in, h.format);
    } catch (const std::exception& e) {
      err << "record " << index + 1 << ": " << e.what() << "\n";
      return 1;
    }
    if (!c) break;
    if (c->size() != h.n) {
      err << "record " << index + 1 << ": expected " << h.n << " bits, got " << c->size() << "\n";
      status = 1;
    } else {
      write_record(out, corrupt(*c, cfg.s, line_seed(cfg.seed, index)), h.format);
    }
    ++index;
  }
  return status;
}

int cmd_decode(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  (void)cfg;
  CodewordHeader h;
  std::optional<CodecParams> p;
  try {
    h = read_header(in);
    p = params_from(h);
  } catch (const std::exception& e) {
    err << "decode: " << e.what() << "\n";
    return 2;
  }
  int status = 0;
  std::size_t index = 0;
  while (true) {
    ++index;
    std::optional<BitString> y;
    try {
      y = read_record(in, h.format);
    } catch (const std::exception& e) {
      err << "record " << index << ": " << e.what() << "\n";
      return 1;
    }
    if (!y) break;
    try {
      out << decode(*y, *p).str() << "\n";
    } catch (const DecodeError& e) {
      out << "\n";
      err << "record " << index << ": decode failure at stage " << e.what() << "\n";
      status = 1;
    } catch (const InvariantViolation& e) {
      out << "\n";
      err << "record " << index << ": internal invariant violated: " << e.what() << "\n";
      status = 3;
    }
  }
  return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.kind == "lemma3") return verify_lemma3(cfg, out);
    if (cfg.kind == "roundtrip") return verify_roundtrip(cfg, out, err);
    if (cfg.kind == "sieve") return verify_sieve(cfg, out);
    err << "verify: unknown kind '" << cfg.kind << "' (expected lemma3, roundtrip or sieve)\n";
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace delsub::cli
