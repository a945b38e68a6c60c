#include "trib/exact_int.hpp"

#include <algorithm>

namespace trib {

namespace {

constexpr ExactInt kMax = static_cast<ExactInt>(
    (static_cast<unsigned __int128>(1) << 127) - 1);

}  // namespace

std::string to_string(ExactInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the unsigned domain so the minimum value does not overflow.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

ExactInt parse_exact(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("integer has no digits: " + std::string(text));
  ExactInt value = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not an integer: " + std::string(text));
    }
    const int digit = ch - '0';
    if (value > (kMax - digit) / 10) {
      throw std::out_of_range("integer overflows 128 bits: " + std::string(text));
    }
    value = value * 10 + digit;
  }
  return negative ? -value : value;
}

ExactInt exact_div(ExactInt num, ExactInt den, std::string_view what) {
  if (den == 0 || num % den != 0) {
    throw DivisibilityError("inexact division in " + std::string(what) + ": " +
                            to_string(num) + " / " + to_string(den));
  }
  return num / den;
}

}  // namespace trib
