#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delsub/bitstring.hpp"
#include "delsub/oracle.hpp"

// Command implementations behind tools/delsub. Each command reads and writes
// streams and returns the process exit status, so tests drive them directly.

namespace delsub::cli {

enum class Format { text, bin };

struct RunConfig {
  std::size_t k = 0;
  int s = 1;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  bool exhaustive = false;
  Format format = Format::text;
  std::size_t max_n = oracle::kDefaultSieveMaxN;
  // verify
  std::string kind;
  std::size_t length = 0;  // --L for lemma3, --n for sieve
};

/// Key=value header preceding codeword records. `format` is always the last
/// key; records start on the next line (text) or byte (bin).
struct CodewordHeader {
  std::size_t k = 0;
  int s = 0;
  int m = 0;
  std::uint32_t primitive_poly = 0;
  std::size_t w_p = 0;
  std::size_t n = 0;
  Format format = Format::text;
};

void write_header(std::ostream& out, const CodewordHeader& h);
/// Throws std::runtime_error on a missing or malformed header.
CodewordHeader read_header(std::istream& in);

/// Text: one '0'/'1' line per record. Bin: 4-byte big-endian bit count, then
/// the bits packed 8 per byte, most significant bit first, zero padded.
void write_record(std::ostream& out, const BitString& bits, Format format);
/// Returns nullopt at end of input.
std::optional<BitString> read_record(std::istream& in, Format format);

/// Per-record seed: splitmix64(master + index * 0x9e3779b97f4a7c15).
std::uint64_t line_seed(std::uint64_t master, std::uint64_t index);

int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_encode(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_corrupt(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_decode(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
/// kind: lemma3 | roundtrip | sieve.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace delsub::cli
