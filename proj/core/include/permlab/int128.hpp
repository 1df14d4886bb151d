#pragma once

#include <cstdint>
#include <string>

namespace permlab {

using i128 = __int128;
using u128 = unsigned __int128;

// Ground-set elements are capped at |x| <= 2^40 so that products and
// triple sums of labels stay exact in 128-bit arithmetic.
inline constexpr i128 kElementBound = i128{1} << 40;

std::string to_string(i128 value);

// Parses an optional sign followed by decimal digits; throws UsageError.
i128 parse_i128(const std::string& text);

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Mathematical modulus, result in [0, m).
inline i128 mod_floor(i128 v, i128 m) {
  i128 r = v % m;
  return r < 0 ? r + m : r;
}

i128 gcd128(i128 a, i128 b);

}  // namespace permlab
