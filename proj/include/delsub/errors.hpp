#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace delsub {

enum class DecodeStage {
  length,        // input length is neither n-1 nor n
  repetition,    // third segment: no feasible alignment
  checksum,      // second segment: no candidate matches the recovered checksum
  syndrome_tag,  // first segment: no codeword matches the tag
};

std::string_view stage_name(DecodeStage stage);

/// The input is outside the promised channel (more than one deletion or more
/// than s substitutions). Recoverable; reported per input word.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeStage stage, const std::string& what)
      : std::runtime_error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}

  [[nodiscard]] DecodeStage stage() const noexcept { return stage_; }

 private:
  DecodeStage stage_;
};

/// A uniqueness guarantee of the construction failed. Indicates a bug, never
/// a bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The modulus search ran past the fixed tag field width.
class WidthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string_view stage_name(DecodeStage stage) {
  switch (stage) {
    case DecodeStage::length:
      return "length";
    case DecodeStage::repetition:
      return "repetition";
    case DecodeStage::checksum:
      return "checksum";
    case DecodeStage::syndrome_tag:
      return "syndrome-tag";
  }
  return "unknown";
}

}  // namespace delsub
