#include "permlab/int128.hpp"

#include <algorithm>

#include "permlab/errors.hpp"

namespace permlab {

std::string to_string(i128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  u128 magnitude = negative ? u128(0) - u128(value) : u128(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(char('0' + int(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

i128 parse_i128(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw UsageError("not an integer: '" + text + "'");
  u128 magnitude = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw UsageError("not an integer: '" + text + "'");
    magnitude = magnitude * 10 + u128(c - '0');
    if (magnitude > (u128(1) << 126)) throw UsageError("integer out of range: '" + text + "'");
  }
  return negative ? -i128(magnitude) : i128(magnitude);
}

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace permlab
