#pragma once

// Jenkins' criterion for N = p_1^{h_1} ... p_t^{h_t} with d in M_b(p_i) for
// every i. Two routes are offered: the lcm-quotient test on the d-smooth
// parts of p_j^{h_j - m_j} k_j, and the direct gcd(b^k - 1, N) = 1 test.

#include <algorithm>
#include <vector>

#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/midy.hpp"
#include "midylab/natural.hpp"
#include "midylab/order.hpp"

namespace midylab {

struct JenkinsPrime {
  Natural prime;
  unsigned exponent = 0;  // h
  Natural order;          // |b|_p
  Natural k;              // |b|_p / d
  unsigned lift = 0;      // m = v_p(b^{|b|_p} - 1)
};

class JenkinsInstance {
 public:
  // Validates every hypothesis of the criterion: distinct primes, positive
  // exponents, d > 1, d | |b|_{p_i} and d in M_b(p_i).
  static JenkinsInstance make(const Natural& base, const Natural& d,
                              const std::vector<PrimePower>& primes) {
    if (base < 2) throw PreconditionError("jenkins: base must be at least 2");
    if (d <= 1) throw PreconditionError("jenkins: d must be greater than 1");
    if (primes.empty()) {
      throw PreconditionError("jenkins: at least one prime is required");
    }
    JenkinsInstance inst;
    inst.base_ = base;
    inst.d_ = d;
    for (const auto& [p, h] : primes) {
      if (h == 0) {
        throw PreconditionError("jenkins: exponent of " + p.str() +
                                " must be positive");
      }
      if (!is_prime(p)) throw PreconditionError("jenkins: " + p.str() + " is not prime");
      const bool repeated =
          std::any_of(inst.primes_.begin(), inst.primes_.end(),
                      [&](const JenkinsPrime& q) { return q.prime == p; });
      if (repeated) {
        throw PreconditionError("jenkins: prime " + p.str() + " repeated");
      }
      if (base % p == 0) {
        throw PreconditionError("jenkins: prime " + p.str() +
                                " divides the base");
      }
      JenkinsPrime entry{p, h, order_mod_prime(base, p), 0, 0};
      if (entry.order % d != 0) {
        throw PreconditionError("jenkins: d = " + d.str() +
                                " does not divide |b|_" + p.str() + " = " +
                                entry.order.str());
      }
      const MidyContext ctx{base, p, Factorization{{{p, 1}}, false},
                            entry.order};
      if (!midy_check_ppl2(ctx, d).holds) {
        throw PreconditionError("jenkins: d = " + d.str() +
                                " is not in the Midy set of " + p.str());
      }
      entry.k = entry.order / d;
      entry.lift = lifting_exponent(base, p, entry.order);
      inst.primes_.push_back(std::move(entry));
    }
    return inst;
  }

  const Natural& base() const { return base_; }
  const Natural& d() const { return d_; }
  const std::vector<JenkinsPrime>& primes() const { return primes_; }

  Factorization factorization() const {
    Factorization f;
    for (const auto& p : primes_) f.factors.push_back({p.prime, p.exponent});
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) {
                return a.prime < b.prime;
              });
    return f;
  }

  Natural modulus() const { return factorization().value(); }

 private:
  JenkinsInstance() = default;

  Natural base_;
  Natural d_;
  std::vector<JenkinsPrime> primes_;
};

// p_j^{max(h_j - m_j, 0)} k_j written as d^c * prod q_i^{alpha_i} * y.
struct JenkinsRow {
  Natural value;  // p_j^{max(h_j - m_j, 0)} k_j
  unsigned c = 0;
  std::vector<unsigned> alpha;  // indexed like JenkinsDecomposition::d_primes
  Natural y;
};

struct JenkinsDecomposition {
  std::vector<PrimePower> d_primes;  // d = prod q_i^{r_i}
  std::vector<JenkinsRow> rows;      // one per p_j, in instance order
};

inline JenkinsDecomposition jenkins_decompose(const JenkinsInstance& inst) {
  JenkinsDecomposition out;
  out.d_primes = factor(inst.d()).factors;
  for (const auto& p : inst.primes()) {
    JenkinsRow row;
    // Exponents h <= m leave |b|_{p^h} = |b|_p, so the p-part is clamped at 1.
    const unsigned lift_exp = p.exponent > p.lift ? p.exponent - p.lift : 0;
    row.value = boost::multiprecision::pow(p.prime, lift_exp) * p.k;

    Natural rest = p.k;
    while (rest % inst.d() == 0) {
      rest /= inst.d();
      ++row.c;
    }
    rest = row.value / boost::multiprecision::pow(inst.d(), row.c);
    for (const auto& q : out.d_primes) {
      unsigned a = 0;
      while (rest % q.prime == 0) {
        rest /= q.prime;
        ++a;
      }
      row.alpha.push_back(a);
    }
    row.y = rest;
    out.rows.push_back(std::move(row));
  }
  return out;
}

// The lcm-quotient route. For each j, the quotient
//   lcm_i(d^{c_i} prod q^{alpha^{(i)}}) / (d^{c_j} prod q^{alpha^{(j)}})
// is divisible by d exactly when its exponent at every q_i reaches r_i;
// d in M_b(N) iff no j yields such a quotient. The y cofactors are prime to
// d and do not enter the test.
inline bool jenkins_check(const JenkinsInstance& inst) {
  const auto dec = jenkins_decompose(inst);
  const std::size_t s = dec.d_primes.size();
  std::vector<unsigned> lcm_exp(s, 0);
  auto exponent = [&](const JenkinsRow& row, std::size_t i) {
    return row.c * dec.d_primes[i].exponent + row.alpha[i];
  };
  for (const auto& row : dec.rows) {
    for (std::size_t i = 0; i < s; ++i) {
      lcm_exp[i] = std::max(lcm_exp[i], exponent(row, i));
    }
  }
  for (const auto& row : dec.rows) {
    bool divisible = true;
    for (std::size_t i = 0; i < s; ++i) {
      if (lcm_exp[i] - exponent(row, i) < dec.d_primes[i].exponent) {
        divisible = false;
        break;
      }
    }
    if (divisible) return false;
  }
  return true;
}

// The gcd route: gcd(b^k - 1, N) = 1 with k = |b|_N / d.
inline bool jenkins_check_gcd(const JenkinsInstance& inst) {
  const Factorization f = inst.factorization();
  const Natural N = f.value();
  const Natural k = order_mod(inst.base(), N, f) / inst.d();
  return gcd_pow_minus_one(inst.base(), k, N) == 1;
}

}  // namespace midylab
