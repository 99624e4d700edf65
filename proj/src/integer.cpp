#include "coperm/integer.hpp"

#include <algorithm>
#include <limits>

#include "coperm/error.hpp"

namespace coperm {

std::string to_string(Int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the unsigned magnitude so the minimum value is handled.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt to_big(Int value) {
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

Int to_fixed(const BigInt& value) {
  static const BigInt kMax = to_big(std::numeric_limits<Int>::max());
  static const BigInt kMin = to_big(std::numeric_limits<Int>::min());
  if (value > kMax || value < kMin) {
    throw Error(ErrorCode::Overflow, "value does not fit in 128 bits");
  }
  const bool negative = value < 0;
  BigInt mag = negative ? BigInt(-value) : value;
  const auto lo = static_cast<std::uint64_t>(mag & std::numeric_limits<std::uint64_t>::max());
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
  return negative ? static_cast<Int>(-u) : static_cast<Int>(u);
}

}  // namespace coperm
