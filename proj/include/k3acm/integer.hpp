#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3acm/errors.hpp"

namespace k3acm {

// Every quantity in logic paths is an exact, unbounded integer.
// Expression templates off: results are plain numbers, so `.str()` and `auto`
// behave as expected.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& value) { return value.str(); }

inline bool fits_int64(const Integer& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

inline bool is_even(const Integer& value) { return (value & 1) == 0; }

// Floor-mod with a nonnegative result.
inline Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

// Halves a self-intersection number. On an even lattice the argument is always
// even; an odd argument means the lattice invariant was bypassed.
inline Integer checked_half(const Integer& value) {
  if (!is_even(value))
    throw ConsistencyError("odd self-intersection " + value.str() +
                           " cannot be halved; lattice is not even");
  return value / 2;
}

// Parses an optionally signed decimal integer; rejects anything else.
inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size())
    throw UsageError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw UsageError("expected an integer, got '" + std::string(text) + "'");
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

}  // namespace k3acm
