#pragma once

// Midy sets of prime powers q^v, and the constructive chain of primes
// P_1 < P_2 < ... with P_j = 1 (mod q^v) built from smallest Midy witnesses.

#include <cstdint>
#include <optional>
#include <vector>

#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/midy.hpp"
#include "midylab/natural.hpp"
#include "midylab/order.hpp"

namespace midylab {

inline constexpr std::uint64_t kDefaultSearchBound = 10'000'000;

struct StructurePrime {
  Natural prime;
  unsigned exponent = 0;   // h_i
  unsigned nu_q_order = 0;  // v_q(|b|_{p_i})
};

// N = q^n * prod p_i^{h_i} seen from the prime q.
struct PrimePowerStructure {
  Natural base;
  Natural q;
  unsigned v = 0;
  Natural modulus;
  unsigned n = 0;
  // m = v_q(b^{|b|_q} - 1); absent when q divides the base.
  std::optional<unsigned> m;
  std::vector<StructurePrime> others;
  unsigned nu_q_order = 0;  // v_q(|b|_N)
};

// Outcome of both readings of the q^v criterion.
//   formula: n <= v, every v_q(|b|_{p_i}) > 0, and
//            max_i{n - m, v_q(|b|_{p_i})} - v < min_i v_q(|b|_{p_i}),
//            with n - m counted only when n > m.
//   per_prime: n <= v and v_q(|b|_{p_i}) > v_q(|b|_N) - v for every p_i != q.
// `holds` follows per_prime. N without a prime other than q, and even N with
// q = 2, are decided by midy_check_ppl2 and both readings take that verdict.
struct StructureEvaluation {
  PrimePowerStructure structure;
  bool formula = false;
  bool per_prime = false;
  bool routed = false;
  bool holds = false;

  bool readings_agree() const { return formula == per_prime; }
};

namespace detail {

inline void require_prime(const Natural& q, const char* who) {
  if (!is_prime(q)) {
    throw PreconditionError(std::string(who) + ": " + q.str() +
                            " is not prime");
  }
}

}  // namespace detail

inline StructureEvaluation evaluate_prime_power_structure(const MidyContext& ctx,
                                                          const Natural& q,
                                                          unsigned v) {
  detail::require_prime(q, "structure");
  if (v == 0) throw PreconditionError("structure: v must be positive");
  const Natural qv = boost::multiprecision::pow(q, v);
  if (ctx.order % qv != 0) {
    throw PreconditionError("structure: " + qv.str() +
                            " does not divide the order " + ctx.order.str());
  }

  StructureEvaluation out;
  auto& s = out.structure;
  s.base = ctx.base;
  s.q = q;
  s.v = v;
  s.modulus = ctx.modulus;
  s.nu_q_order = valuation(q, ctx.order);
  if (ctx.base % q != 0) s.m = lifting_exponent(ctx.base, q);
  for (const auto& [p, h] : ctx.factors.factors) {
    if (p == q) {
      s.n = h;
    } else {
      s.others.push_back({p, h, valuation(q, order_mod_prime(ctx.base, p))});
    }
  }

  // Without another prime there is no shape to read; q = 2 dividing N meets
  // the 2-adic allowance of midy_check_ppl2, which neither reading models.
  if (s.others.empty() || (q == 2 && s.n > 0)) {
    out.routed = true;
    out.holds = out.formula = out.per_prime = midy_check_ppl2(ctx, qv).holds;
    return out;
  }

  unsigned min_nu = s.others.front().nu_q_order;
  unsigned max_nu = 0;
  for (const auto& p : s.others) {
    min_nu = std::min(min_nu, p.nu_q_order);
    max_nu = std::max(max_nu, p.nu_q_order);
  }
  const unsigned lifted = (s.m && s.n > *s.m) ? s.n - *s.m : 0;
  const long t_formula = std::max<long>(lifted, max_nu);
  out.formula = s.n <= v && min_nu > 0 &&
                t_formula - static_cast<long>(v) < static_cast<long>(min_nu);

  const long slack = static_cast<long>(s.nu_q_order) - static_cast<long>(v);
  out.per_prime = s.n <= v;
  for (const auto& p : s.others) {
    if (static_cast<long>(p.nu_q_order) <= slack) out.per_prime = false;
  }
  out.holds = out.per_prime;
  return out;
}

inline StructureEvaluation evaluate_prime_power_structure(const Natural& b,
                                                          const Natural& N,
                                                          const Natural& q,
                                                          unsigned v) {
  return evaluate_prime_power_structure(make_context(b, N), q, v);
}

// q^v in M_b(N), decided from the shape of N and the q-parts of the orders
// |b|_{p_i}.
inline bool prime_power_midy_structure(const Natural& b, const Natural& N,
                                       const Natural& q, unsigned v) {
  return evaluate_prime_power_structure(b, N, q, v).holds;
}

// q in M_b(N) for a prime q | |b|_N:
//   (N, q) = 1: v_q(|b|_p) = v_q(|b|_N) for every prime p | N;
//   (N, q) > 1: q^2 does not divide N and the same equality for p != q.
// Even N with q = 2 is passed to midy_check_ppl2.
inline bool midy_prime_v1_check(const MidyContext& ctx, const Natural& q) {
  detail::require_prime(q, "midy_prime_v1_check");
  if (ctx.order % q != 0) {
    throw PreconditionError("midy_prime_v1_check: " + q.str() +
                            " does not divide the order " + ctx.order.str());
  }
  const unsigned target = valuation(q, ctx.order);
  // 2 | N may be tolerated beyond v_2(2) = 1; see midy_check_ppl2.
  if (q == 2 && ctx.modulus % 2 == 0) return midy_check_ppl2(ctx, q).holds;
  if (ctx.factors.exponent_of(q) >= 2) return false;
  for (const auto& [p, h] : ctx.factors.factors) {
    if (p == q) continue;
    if (valuation(q, order_mod_prime(ctx.base, p)) != target) return false;
  }
  return true;
}

inline bool midy_prime_v1_check(const Natural& b, const Natural& N,
                                const Natural& q) {
  return midy_prime_v1_check(make_context(b, N), q);
}

namespace detail {

// Membership of M in M_b(N) with the cheap order filter first.
inline bool in_midy_set(const MidyContext& ctx, const Natural& M) {
  return ctx.order % M == 0 && midy_check_ppl2(ctx, M).holds;
}

}  // namespace detail

// Smallest N >= 2 coprime to b with q^v in M_b(N), by linear scan up to
// `bound`. The result is asserted to be a prime = 1 (mod q^v). For q = 2
// the 2-adic allowance of midy_check_ppl2 can make a power of two the least
// witness (2 is in M_3(4)); that is reported as HypothesisNotApplicable.
inline Natural smallest_midy_witness(const Natural& b, const Natural& q,
                                     unsigned v,
                                     std::uint64_t bound = kDefaultSearchBound) {
  if (b < 2) throw PreconditionError("witness: base must be at least 2");
  detail::require_prime(q, "witness");
  if (v == 0) throw PreconditionError("witness: v must be positive");
  const Natural qv = boost::multiprecision::pow(q, v);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const Natural N(n);
    if (gcd(N, b) != 1) continue;
    if (!detail::in_midy_set(make_context(b, N), qv)) continue;
    if (!is_prime(N) || N % qv != 1) {
      if (q == 2) {
        throw HypothesisNotApplicable("witness: smallest N = " + N.str() +
                                      " is not a prime = 1 mod " + qv.str());
      }
      throw std::logic_error("witness: smallest N = " + N.str() +
                             " is not a prime = 1 mod " + qv.str());
    }
    return N;
  }
  throw SearchExhausted("no N with " + qv.str() + " in its Midy set", bound);
}

struct ProgressionStep {
  Natural modulus;  // q^{t_j v}
  Natural prime;    // P_j
};

struct ProgressionTrace {
  Natural base;
  Natural q;
  unsigned v = 0;
  std::vector<ProgressionStep> steps;
  // Some P_j exceeds 64 bits and passed only a strong probable-prime test.
  bool probable = false;
};

// Smallest prime P = 1 (mod M) with M in M_b(P), examining the candidates
// 1 + i M for i = 1 .. bound.
inline Natural smallest_midy_prime(const Natural& b, const Natural& M,
                                   std::uint64_t bound, bool& probable) {
  for (std::uint64_t i = 1; i <= bound; ++i) {
    const Natural P = 1 + Natural(i) * M;
    const Primality kind = primality(P);
    if (kind == Primality::composite || b % P == 0) continue;
    if (!detail::in_midy_set(make_context(b, P, Factorization{{{P, 1}}, false}),
                             M)) {
      continue;
    }
    if (kind == Primality::probable_prime) probable = true;
    return P;
  }
  throw SearchExhausted("no prime = 1 mod " + M.str() + " with " + M.str() +
                            " in its Midy set",
                        bound);
}

// P_1 is the smallest Midy witness of q^v; every later step takes the least
// t with q^{t v} > P_{j-1} and the smallest prime P_j = 1 (mod q^{t v}) with
// q^{t v} in M_b(P_j). `bound` limits each search.
inline ProgressionTrace prime_progression(
    const Natural& b, const Natural& q, unsigned v, std::size_t count,
    std::uint64_t bound = kDefaultSearchBound) {
  if (count == 0) throw PreconditionError("progression: count must be >= 1");
  ProgressionTrace trace{b, q, v, {}, false};
  const Natural qv = boost::multiprecision::pow(q, v);
  trace.steps.push_back({qv, smallest_midy_witness(b, q, v, bound)});
  while (trace.steps.size() < count) {
    const Natural& previous = trace.steps.back().prime;
    Natural modulus = qv;
    while (modulus <= previous) modulus *= qv;
    Natural prime = smallest_midy_prime(b, modulus, bound, trace.probable);
    trace.steps.push_back({std::move(modulus), std::move(prime)});
  }
  return trace;
}

}  // namespace midylab
