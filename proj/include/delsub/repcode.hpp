#pragma once

#include <cstddef>

#include "delsub/bitstring.hpp"
#include "delsub/errors.hpp"

namespace delsub {

/// Each bit of u repeated `fold` times, in order.
BitString rep_encode(const BitString& u, std::size_t fold);

/// Recovers u from a repetition codeword that lost exactly one symbol and
/// took at most s flips. |y| must be fold * msg_len - 1.
///
/// Every hypothesis d (block d is the short one) is scored by majority
/// decoding each block and counting minority symbols; hypotheses with at most
/// s minority symbols are feasible. No feasible hypothesis throws
/// DecodeError(repetition); feasible hypotheses that disagree throw
/// InvariantViolation.
BitString rep_decode(const BitString& y, std::size_t fold, std::size_t msg_len, int s);

}  // namespace delsub
