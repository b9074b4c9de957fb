#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "midylab/natural.hpp"

namespace midylab {

// Which decider produced a verdict.
//   ppl2   - valuations of N against d over the primes of gcd(b^k - 1, N)
//   ppl3   - valuations of N against d, with a witness prime q of |b|_N
//   direct - block sums of every x/N checked digit by digit
enum class Method { ppl2, ppl3, direct };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::ppl2:
      return "ppl2";
    case Method::ppl3:
      return "ppl3";
    case Method::direct:
      return "direct";
  }
  return "?";
}

// A prime p | N whose valuation in N exceeds what d tolerates. `tolerated`
// is v_p(d) except at p = 2, where it can be larger (see midy.hpp).
struct PrimeWitness {
  Natural prime;
  unsigned nu_n = 0;
  unsigned nu_d = 0;
  unsigned tolerated = 0;
};

// The smallest numerator x whose block sum is not a multiple of b^k - 1.
struct NumeratorWitness {
  Natural x;
};

// g = gcd(b^k - 1, N).
struct GcdWitness {
  Natural g;
};

using Certificate = std::variant<PrimeWitness, NumeratorWitness, GcdWitness>;

struct MidyVerdict {
  bool holds = false;
  Method method = Method::ppl2;
  std::optional<Certificate> certificate;
};

}  // namespace midylab
