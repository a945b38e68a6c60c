#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trib {

/// Signed exact integer used for every count and position.
__extension__ typedef __int128 ExactInt;

/// Largest prefix length any counting function accepts.
inline constexpr ExactInt kNCap = 1'000'000'000'000'000'000;

/// Raised when a closed form that must be integral leaves a remainder.
/// This always indicates a transcription or logic bug, never bad input.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when the build-time self-test finds a closed form that disagrees
/// with direct summation.
class SelfTestError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(ExactInt value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on malformed input and std::out_of_range on overflow.
ExactInt parse_exact(std::string_view text);

/// num / den, throwing DivisibilityError (tagged with `what`) if the division
/// is not exact.
ExactInt exact_div(ExactInt num, ExactInt den, std::string_view what);

}  // namespace trib
