#pragma once

// Midy deciders working from the factorization of N and modular powers.
// Only reverify, on a digit certificate, expands a fraction.

#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/expansion.hpp"
#include "midylab/natural.hpp"
#include "midylab/order.hpp"
#include "midylab/verdict.hpp"

namespace midylab {

// Everything the deciders need about a (b, N) pair, computed once.
struct MidyContext {
  Natural base;
  Natural modulus;
  Factorization factors;  // of N
  Natural order;          // |b|_N
};

inline MidyContext make_context(const Natural& b, const Natural& N,
                                Factorization factors) {
  if (b < 2) throw PreconditionError("midy: base must be at least 2");
  if (N < 1) throw DomainError("midy: modulus must be at least 1");
  if (gcd(b, N) != 1) {
    throw PreconditionError("midy: base " + b.str() + " and modulus " +
                            N.str() + " are not coprime");
  }
  Natural order = order_mod(b, N, factors);
  return {b, N, std::move(factors), std::move(order)};
}

inline MidyContext make_context(const Natural& b, const Natural& N) {
  if (N < 1) throw DomainError("midy: modulus must be at least 1");
  return make_context(b, N, factor(N));
}

struct MidySet {
  Natural base;
  Natural modulus;
  Natural order;
  std::vector<Natural> members;  // ascending
};

// Which primes q are allowed as witnesses in the ppl3 criterion.
enum class WitnessRange {
  order_divisors,  // q | |b|_N
  d_divisors,      // q | d
};

namespace detail {

inline Natural block_length(const MidyContext& ctx, const Natural& d) {
  if (d <= 1) throw PreconditionError("midy: d must be greater than 1");
  if (ctx.order % d != 0) {
    throw PreconditionError("midy: d = " + d.str() +
                            " does not divide the order " + ctx.order.str());
  }
  return ctx.order / d;
}

// Largest v_p(N) compatible with d in M_b(N) at a prime p of
// gcd(b^k - 1, N), where N has v_p(N) = nu_n.
//
// The block sums are all multiples of b^k - 1 iff N divides
// T = (b^{kd} - 1) / (b^k - 1). For odd p, v_p(T) = v_p(d). For p = 2 and
// even d, v_2(T) = v_2(d) + v_2(b^k + 1) - 1, which exceeds v_2(d) when
// b^k = 3 (mod 4): b = 3, N = 4, d = 2 has digit sums 0 + 2 and 2 + 0.
inline unsigned tolerated_exponent(const Natural& b, const Natural& k,
                                   const Natural& p, const Natural& d,
                                   unsigned nu_n) {
  const unsigned nu_d = midylab::valuation(p, d);
  if (p != 2 || nu_d == 0) return nu_d;
  const Natural modulus = Natural(1) << (nu_n + 2);
  const Natural r = midylab::pow_mod(b, k, modulus);
  if (r % 4 != 3) return nu_d;
  const Natural s = (r + 1) % modulus;
  const unsigned extra = s == 0 ? nu_n + 2 : midylab::valuation(2, s);
  return nu_d + extra - 1;
}

}  // namespace detail

// d in M_b(N) iff v_p(N) <= v_p(d) for every prime p of gcd(b^k - 1, N),
// with the larger allowance of detail::tolerated_exponent at p = 2. The
// primes of the gcd are the primes p of N with b^k = 1 (mod p). A failing
// verdict names the offending prime; a passing one carries the gcd.
inline MidyVerdict midy_check_ppl2(const MidyContext& ctx, const Natural& d) {
  const Natural k = detail::block_length(ctx, d);
  for (const auto& [p, e] : ctx.factors.factors) {
    if (pow_mod(ctx.base, k, p) != 1) continue;
    const unsigned allowed = detail::tolerated_exponent(ctx.base, k, p, d, e);
    if (e > allowed) {
      return {false, Method::ppl2, PrimeWitness{p, e, valuation(p, d), allowed}};
    }
  }
  return {true, Method::ppl2,
          GcdWitness{gcd_pow_minus_one(ctx.base, k, ctx.modulus)}};
}

inline MidyVerdict midy_check_ppl2(const Natural& b, const Natural& N,
                                   const Natural& d) {
  return midy_check_ppl2(make_context(b, N), d);
}

// For every prime p | N with v_p(N) > v_p(d) there must be a prime q with
// v_q(|b|_p) > v_q(|b|_N) - v_q(d). p = 2 never has such a q (|b|_2 = 1) and
// is held to the same allowance as in midy_check_ppl2. The failing
// certificate is the first p (in increasing order) with no such q.
inline MidyVerdict midy_check_ppl3(
    const MidyContext& ctx, const Natural& d,
    WitnessRange range = WitnessRange::order_divisors) {
  const Natural k = detail::block_length(ctx, d);
  const Factorization q_source =
      factor(range == WitnessRange::order_divisors ? ctx.order : d);
  for (const auto& [p, e] : ctx.factors.factors) {
    const unsigned nu_d = valuation(p, d);
    const unsigned allowed =
        p == 2 ? detail::tolerated_exponent(ctx.base, k, p, d, e) : nu_d;
    if (e <= allowed) continue;
    const Natural order_p = order_mod_prime(ctx.base, p);
    bool found = false;
    for (const auto& q : q_source.factors) {
      const unsigned lhs = valuation(q.prime, order_p);
      const long rhs = static_cast<long>(valuation(q.prime, ctx.order)) -
                       static_cast<long>(valuation(q.prime, d));
      if (static_cast<long>(lhs) > rhs) {
        found = true;
        break;
      }
    }
    if (!found) return {false, Method::ppl3, PrimeWitness{p, e, nu_d, allowed}};
  }
  return {true, Method::ppl3, std::nullopt};
}

inline MidyVerdict midy_check_ppl3(
    const Natural& b, const Natural& N, const Natural& d,
    WitnessRange range = WitnessRange::order_divisors) {
  return midy_check_ppl3(make_context(b, N), d, range);
}

// Verdicts for every divisor d > 1 of |b|_N, ascending in d.
inline std::vector<std::pair<Natural, MidyVerdict>> midy_verdicts(
    const MidyContext& ctx) {
  std::vector<std::pair<Natural, MidyVerdict>> out;
  for (const auto& d : divisors(factor(ctx.order))) {
    if (d > 1) out.emplace_back(d, midy_check_ppl2(ctx, d));
  }
  return out;
}

inline MidySet midy_set(const MidyContext& ctx) {
  MidySet set{ctx.base, ctx.modulus, ctx.order, {}};
  for (auto& [d, verdict] : midy_verdicts(ctx)) {
    if (verdict.holds) set.members.push_back(d);
  }
  return set;
}

inline MidySet midy_set(const Natural& b, const Natural& N) {
  return midy_set(make_context(b, N));
}

// The three statements that coincide when every prime of N has
// v_p(N) > v_p(d):
//   coprime   - gcd(b^k - 1, N) = 1
//   midy      - d in M_b(N)
//   witnessed - each prime p | N has a prime q | d with
//               v_q(|b|_p) > v_q(|b|_N) - v_q(d)
struct GuelTriple {
  bool coprime = false;
  bool midy = false;
  bool witnessed = false;

  bool consistent() const { return coprime == midy && midy == witnessed; }
};

inline GuelTriple guel_triple(const MidyContext& ctx, const Natural& d) {
  const Natural k = detail::block_length(ctx, d);
  for (const auto& [p, e] : ctx.factors.factors) {
    if (e <= valuation(p, d)) {
      throw HypothesisNotApplicable(
          "guel: prime " + p.str() + " has v_p(N) = " + std::to_string(e) +
          " <= v_p(d)");
    }
    // With the extra 2-adic allowance the gcd statement and the Midy
    // statement part ways, so the three are not claimed to agree.
    if (p == 2 && detail::tolerated_exponent(ctx.base, k, p, d, e) > valuation(p, d)) {
      throw HypothesisNotApplicable(
          "guel: b^k = 3 (mod 4) with d even and 2 | N; the prime 2 tolerates "
          "more than v_2(d)");
    }
  }
  GuelTriple out;
  out.coprime = gcd_pow_minus_one(ctx.base, k, ctx.modulus) == 1;
  out.midy = midy_check_ppl2(ctx, d).holds;
  out.witnessed = midy_check_ppl3(ctx, d, WitnessRange::d_divisors).holds;
  return out;
}

inline GuelTriple guel_triple(const Natural& b, const Natural& N,
                              const Natural& d) {
  return guel_triple(make_context(b, N), d);
}

// Re-derives a verdict's certificate from arith primitives (and, for direct
// verdicts, from the digits of x/N). Returns false if the certificate does
// not support the verdict.
inline bool reverify(const MidyContext& ctx, const Natural& d,
                     const MidyVerdict& verdict) {
  const Natural k = detail::block_length(ctx, d);
  if (!verdict.certificate) return verdict.holds;
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, PrimeWitness>) {
          if (verdict.holds || !is_prime(cert.prime) ||
              ctx.modulus % cert.prime != 0) {
            return false;
          }
          return valuation(cert.prime, ctx.modulus) == cert.nu_n &&
                 valuation(cert.prime, d) == cert.nu_d &&
                 cert.tolerated == detail::tolerated_exponent(
                                       ctx.base, k, cert.prime, d, cert.nu_n) &&
                 cert.nu_n > cert.tolerated &&
                 pow_mod(ctx.base, k, cert.prime) == 1;
        } else if constexpr (std::is_same_v<T, GcdWitness>) {
          if (!verdict.holds ||
              cert.g != gcd_pow_minus_one(ctx.base, k, ctx.modulus)) {
            return false;
          }
          if (cert.g == 1) return true;
          for (const auto& [p, e] : factor(cert.g).factors) {
            const unsigned nu_n = valuation(p, ctx.modulus);
            if (nu_n > detail::tolerated_exponent(ctx.base, k, p, d, nu_n)) {
              return false;
            }
          }
          return true;
        } else {
          if (verdict.holds) return false;
          const auto e = period_digits(cert.x, ctx.modulus, ctx.base);
          const auto blocks = blocks_and_sum(e, d.convert_to<std::size_t>());
          const Natural modulus =
              boost::multiprecision::pow(ctx.base, to_unsigned(k)) - 1;
          return blocks.sum % modulus != 0;
        }
      },
      *verdict.certificate);
}

}  // namespace midylab
