#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "midylab/errors.hpp"

namespace midylab {

// Arbitrary-precision integer. Every Natural handled by the library is
// non-negative; the signed backend only keeps intermediate subtraction safe.
// Expression templates are off so `auto` never captures a dangling operand.
using Natural = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline bool fits_u64(const Natural& n) {
  return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const Natural& n) {
  if (!fits_u64(n)) {
    throw DomainError("value " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::uint64_t>();
}

inline unsigned to_unsigned(const Natural& n) {
  if (n < 0 || n > std::numeric_limits<unsigned>::max()) {
    throw DomainError("value " + n.str() + " does not fit in an unsigned int");
  }
  return n.convert_to<unsigned>();
}

// Parses a non-empty string of decimal digits.
inline Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw DomainError("empty number");
  }
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError("not a decimal natural number: '" + std::string(text) +
                        "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace midylab
