#include "delsub/repcode.hpp"

#include <optional>
#include <string>

namespace delsub {

BitString rep_encode(const BitString& u, std::size_t fold) {
  if (u.empty()) throw std::invalid_argument("rep_encode: empty message");
  if (fold == 0) throw std::invalid_argument("rep_encode: fold must be positive");
  BitString out;
  for (Bit b : u) {
    for (std::size_t r = 0; r < fold; ++r) out.push_back(b);
  }
  return out;
}

BitString rep_decode(const BitString& y, std::size_t fold, std::size_t msg_len, int s) {
  if (fold < 2 || msg_len == 0) throw std::invalid_argument("rep_decode: bad block geometry");
  if (s < 0) throw std::invalid_argument("rep_decode: negative substitution budget");
  if (y.size() != fold * msg_len - 1) throw std::invalid_argument("rep_decode: length mismatch");

  const auto budget = static_cast<std::size_t>(s);
  std::optional<BitString> chosen;
  std::size_t chosen_block = 0;
  BitString decoded(msg_len);

  for (std::size_t d = 0; d < msg_len; ++d) {
    std::size_t pos = 0;
    std::size_t mismatches = 0;
    for (std::size_t blk = 0; blk < msg_len && mismatches <= budget; ++blk) {
      const std::size_t size = blk == d ? fold - 1 : fold;
      std::size_t ones = 0;
      for (std::size_t r = 0; r < size; ++r) ones += y[pos + r];
      pos += size;
      const std::size_t zeros = size - ones;
      // ties go to 0; a tied block alone already exceeds the budget for fold = 2s+2
      const Bit bit = ones > zeros ? 1 : 0;
      decoded.set(blk, bit);
      mismatches += bit != 0 ? zeros : ones;
    }
    if (mismatches > budget) continue;
    if (!chosen) {
      chosen = decoded;
      chosen_block = d;
    } else if (*chosen != decoded) {
      throw InvariantViolation("rep_decode: feasible hypotheses " + std::to_string(chosen_block) +
                             " and " + std::to_string(d) + " disagree");
    }
  }
  if (!chosen) throw DecodeError(DecodeStage::repetition, "no alignment within the substitution budget");
  return *chosen;
}

}  // namespace delsub
