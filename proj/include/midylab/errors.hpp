#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace midylab {

// Root of every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the operation (zero modulus, valuation of 0,
// value too large to materialize).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument violates an operation precondition (gcd(b, N) != 1, d does not
// divide the order, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The inputs are valid but fall outside the hypothesis of the criterion being
// evaluated.
class HypothesisNotApplicable : public Error {
 public:
  using Error::Error;
};

// A bounded search ran past its limit without finding a result.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, std::uint64_t bound)
      : Error(what + " (search bound " + std::to_string(bound) + ")"),
        bound_(bound) {}

  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

}  // namespace midylab
