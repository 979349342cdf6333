#include "delsub/codec.hpp"

#include <cmath>
#include <string>

#include "delsub/repcode.hpp"

namespace delsub {

double CodecParams::reference_redundancy() const {
  return (3.0 * s + 4.0) * std::log2(static_cast<double>(n));
}

namespace {

ChecksumParams tag_checksum_for(std::size_t n1, int s) {
  if (n1 <= static_cast<std::size_t>(2 * s + 1)) {
    throw std::invalid_argument("derive_params: tag segment too short for its checksum");
  }
  return ChecksumParams(n1, s);
}

}  // namespace

CodecParams derive_params(std::size_t k, int s) {
  if (k < 1) throw std::invalid_argument("derive_params: k must be >= 1");
  if (s < 1) throw std::invalid_argument("derive_params: s must be >= 1");
  SyndromeCompressor compressor(BchCode::select(k, s));
  const std::size_t n1 = compressor.tag_length();
  CodecParams p{
      .k = k,
      .s = s,
      .compressor = compressor,
      .tag_checksum = tag_checksum_for(n1, s),
  };
  p.n0 = compressor.code().n0();
  p.w_p = compressor.field_width();
  p.n1 = n1;
  p.n2 = p.tag_checksum.packed_width();
  p.fold = 2 * static_cast<std::size_t>(s) + 2;
  p.n = p.n0 + p.n1 + p.fold * p.n2;

  const auto need = static_cast<std::size_t>(s);
  if (p.n0 <= need || p.n1 <= need || p.segment3_length() <= need) {
    throw std::invalid_argument("derive_params: a segment is not longer than s");
  }
  return p;
}

BitString encode(const BitString& x, const CodecParams& params) {
  if (x.size() != params.k) throw std::invalid_argument("encode: message length mismatch");
  const BitString h = params.code().encode(x);
  const BitString g = params.compressor.tag(h).packed;
  const BitString f = pack_bits(f_checksum(g, params.tag_checksum), params.tag_checksum);
  BitString out = h;
  out.append(g).append(rep_encode(f, params.fold));
  return out;
}

SplitWord split(const BitString& y, const CodecParams& params) {
  if (y.size() + 1 != params.n) throw std::invalid_argument("split: word must have length n - 1");
  const std::size_t b1 = params.n0;
  const std::size_t b2 = params.n0 + params.n1;
  return SplitWord{
      .y1 = y.slice(0, b1 - 1),
      .y2 = y.slice(b1, params.n1 - 1),
      .y3 = y.slice(b2, params.segment3_length() - 1),
  };
}

DecodeTrace decode_trace(const BitString& y, const CodecParams& params) {
  BitString word = y;
  if (word.size() == params.n) {
    word = delete_at(word, word.size() - 1);
  } else if (word.size() + 1 != params.n) {
    throw DecodeError(DecodeStage::length, "expected " + std::to_string(params.n - 1) + " or " +
                                               std::to_string(params.n) + " symbols, got " +
                                               std::to_string(y.size()));
  }
  const SplitWord parts = split(word, params);

  DecodeTrace trace;
  trace.checksum_bits = rep_decode(parts.y3, params.fold, params.n2, params.s);
  const BigInt packed = from_bits(trace.checksum_bits);
  if (packed >= params.tag_checksum.range()) {
    throw DecodeError(DecodeStage::repetition, "recovered checksum is out of range");
  }
  const Checksum target = unpack(packed, params.tag_checksum);

  const auto candidates = checksum_survivors(parts.y2, target, params.tag_checksum);
  if (candidates.empty()) {
    throw DecodeError(DecodeStage::checksum, "no tag candidate matches the checksum");
  }
  if (candidates.size() > 1) {
    throw InvariantViolation("decode: " + std::to_string(candidates.size()) +
                             " tag candidates share one checksum");
  }
  trace.tag_segment = candidates.front();

  const SyndromeTag tag = params.compressor.parse_tag(trace.tag_segment);
  trace.precoded = params.compressor.recover(parts.y1, tag);
  trace.message = params.code().extract_info(trace.precoded);
  return trace;
}

BitString decode(const BitString& y, const CodecParams& params) {
  return decode_trace(y, params).message;
}

}  // namespace delsub
