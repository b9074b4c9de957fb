#pragma once

// Multiplicative order |b|_N. The order modulo an odd prime power is lifted
// from the order modulo the prime, powers of two are handled by repeated
// squaring, and the pieces are combined with lcm over the factorization of N.

#include <vector>

#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/natural.hpp"

namespace midylab {

// One prime-power component of an order computation.
struct PrimePowerOrder {
  Natural prime;
  unsigned exponent = 0;  // t in p^t
  Natural order;          // |b|_{p^t}
  unsigned lift = 0;      // m = v_p(b^{|b|_p} - 1)
};

struct OrderRecord {
  Natural base;
  Natural modulus;
  Natural order;
  std::vector<PrimePowerOrder> per_prime;
};

// Order of b modulo the prime p: start from p - 1 and strip prime factors
// while the reduced exponent still annihilates b.
inline Natural order_mod_prime(const Natural& b, const Natural& p) {
  const Natural r = b % p;
  if (r == 0) {
    throw PreconditionError("order: prime " + p.str() + " divides base " +
                            b.str());
  }
  if (p == 2) return 1;
  Natural order = p - 1;
  for (const auto& [q, e] : factor(p - 1).factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(r, order / q, p) != 1) break;
      order /= q;
    }
  }
  return order;
}

// m = v_p(b^{|b|_p} - 1). The residue of b^{|b|_p} is taken modulo growing
// powers of p until it stops vanishing; b^{|b|_p} itself is never formed.
inline unsigned lifting_exponent(const Natural& b, const Natural& p,
                                 const Natural& order_mod_p) {
  if (b < 2) throw DomainError("lifting exponent: base must be at least 2");
  for (unsigned width = 2;; width *= 2) {
    const Natural modulus = boost::multiprecision::pow(p, width);
    const Natural residue = pow_minus_one_mod(b, order_mod_p, modulus);
    if (residue != 0) return valuation(p, residue);
  }
}

inline unsigned lifting_exponent(const Natural& b, const Natural& p) {
  return lifting_exponent(b, p, order_mod_prime(b, p));
}

// Order of odd b modulo 2^t. The group U_{2^t} is a 2-group, so the first
// repeated square that reaches 1 gives the order.
inline Natural order_two_power(const Natural& b, unsigned t) {
  if (t == 0) throw DomainError("order: exponent t must be positive");
  if (b % 2 == 0) {
    throw PreconditionError("order: prime 2 divides base " + b.str());
  }
  const Natural modulus = Natural(1) << t;
  Natural x = b % modulus;
  Natural order = 1;
  while (x != 1) {
    x = x * x % modulus;
    order *= 2;
  }
  return order;
}

// |b|_{p^t} = |b|_p when t <= m, p^{t-m} |b|_p otherwise, for odd p.
// p = 2 is answered by order_two_power.
inline Natural order_prime_power(const Natural& b, const Natural& p,
                                 unsigned t) {
  if (t == 0) throw DomainError("order: exponent t must be positive");
  if (p == 2) return order_two_power(b, t);
  if (b == 1) return 1;
  const Natural base_order = order_mod_prime(b, p);
  const unsigned m = lifting_exponent(b, p, base_order);
  if (t <= m) return base_order;
  return boost::multiprecision::pow(p, t - m) * base_order;
}

inline OrderRecord order_record(const Natural& b, const Natural& N,
                                const Factorization& factors) {
  if (N == 0) throw DomainError("order: modulus must be at least 1");
  if (gcd(b, N) != 1) {
    throw PreconditionError("order: base " + b.str() + " and modulus " +
                            N.str() + " are not coprime");
  }
  OrderRecord record{b, N, 1, {}};
  for (const auto& [p, t] : factors.factors) {
    PrimePowerOrder entry{p, t, 1, 0};
    if (b == 1) {
      record.per_prime.push_back(std::move(entry));
      continue;
    }
    const Natural base_order = order_mod_prime(b, p);
    entry.lift = lifting_exponent(b, p, base_order);
    if (p == 2) {
      entry.order = order_two_power(b, t);
    } else {
      entry.order = t <= entry.lift
                        ? base_order
                        : boost::multiprecision::pow(p, t - entry.lift) *
                              base_order;
    }
    record.order = lcm(record.order, entry.order);
    record.per_prime.push_back(std::move(entry));
  }
  return record;
}

inline OrderRecord order_record(const Natural& b, const Natural& N) {
  if (N == 0) throw DomainError("order: modulus must be at least 1");
  return order_record(b, N, factor(N));
}

// Successive powers until b^L = 1. Linear in the order; kept as an
// independent cross-check of the composed computation.
inline Natural order_mod_naive(const Natural& b, const Natural& N) {
  if (N == 0) throw DomainError("order: modulus must be at least 1");
  if (gcd(b, N) != 1) {
    throw PreconditionError("order: base " + b.str() + " and modulus " +
                            N.str() + " are not coprime");
  }
  if (N == 1) return 1;
  const Natural r = b % N;
  Natural x = r;
  Natural order = 1;
  while (x != 1) {
    x = x * r % N;
    ++order;
  }
  return order;
}

inline Natural order_mod(const Natural& b, const Natural& N,
                         const Factorization& factors) {
  Natural order = order_record(b, N, factors).order;
#ifdef MIDYLAB_CROSSCHECK_ORDER
  if (order != order_mod_naive(b, N)) {
    throw std::logic_error("order_mod: composed order disagrees with naive");
  }
#endif
  return order;
}

inline Natural order_mod(const Natural& b, const Natural& N) {
  if (N == 0) throw DomainError("order: modulus must be at least 1");
  return order_mod(b, N, factor(N));
}

}  // namespace midylab
