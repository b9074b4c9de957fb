#pragma once

// Exact integer kernel: gcd, modular powers, p-adic valuations, primality and
// factorization. Values that fit in a machine word take a 64-bit fast path
// with 128-bit intermediate products; everything else falls back to
// arbitrary precision.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "midylab/errors.hpp"
#include "midylab/natural.hpp"

namespace midylab {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents positive.
// An empty factor list represents 1.
struct Factorization {
  std::vector<PrimePower> factors;
  // Set when some factor exceeds 64 bits and was only accepted by a strong
  // probable-prime test.
  bool probable = false;

  Natural value() const {
    Natural n = 1;
    for (const auto& f : factors) {
      n *= boost::multiprecision::pow(f.prime, f.exponent);
    }
    return n;
  }

  // Exponent of `p` in the factorization, 0 when absent.
  unsigned exponent_of(const Natural& p) const {
    for (const auto& f : factors) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors == b.factors;
  }
};

enum class Primality { composite, prime, probable_prime };

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline constexpr std::uint32_t kTrialBound = 1000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint32_t j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test of odd n > 2 to base a.
inline bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Deterministic for every 64-bit input: the first twelve primes as witnesses
// are sufficient below 3.1 * 10^23.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

inline bool strong_probable_prime(const Natural& n, const Natural& a) {
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Natural x = boost::multiprecision::powm(a % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. `n` must be odd and composite.
// The polynomial constant walks 1, 2, 3, ... so the output is deterministic.
inline u64 rho_split(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Natural rho_split(const Natural& n) {
  for (Natural c = 1;; ++c) {
    Natural x = 2, y = 2, g = 1;
    while (g == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      g = boost::multiprecision::gcd(x > y ? Natural(x - y) : Natural(y - x), n);
    }
    if (g != n) return g;
  }
}

inline void collect_u64(u64 n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(n);
    return;
  }
  u64 f = rho_split(n);
  collect_u64(f, out);
  collect_u64(n / f, out);
}

// Floor of the k-th root by bisection on the bit length.
inline Natural integer_root(const Natural& n, unsigned k) {
  Natural lo = 1, hi = Natural(1) << (boost::multiprecision::msb(n) / k + 1);
  while (lo < hi) {
    const Natural mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// Rho needs about sqrt(p) steps to split p^k, so wide perfect powers are
// peeled off first. Trial division has removed every prime below 2^9.
inline void collect(const Natural& n, std::vector<Natural>& out, bool& probable) {
  if (n == 1) return;
  if (fits_u64(n)) {
    collect_u64(n.convert_to<u64>(), out);
    return;
  }
  for (unsigned k = 2; k <= boost::multiprecision::msb(n) / 9; ++k) {
    const Natural r = integer_root(n, k);
    if (boost::multiprecision::pow(r, k) == n) {
      std::vector<Natural> root;
      collect(r, root, probable);
      for (unsigned i = 0; i < k; ++i) out.insert(out.end(), root.begin(), root.end());
      return;
    }
  }
  bool composite = false;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71}) {
    if (!strong_probable_prime(n, Natural(a))) {
      composite = true;
      break;
    }
  }
  if (!composite) {
    probable = true;
    out.push_back(n);
    return;
  }
  Natural f = rho_split(n);
  collect(f, out, probable);
  collect(n / f, out, probable);
}

}  // namespace detail

inline Natural gcd(const Natural& a, const Natural& b) {
  if (fits_u64(a) && fits_u64(b)) {
    return Natural(std::gcd(a.convert_to<std::uint64_t>(),
                            b.convert_to<std::uint64_t>()));
  }
  return boost::multiprecision::gcd(a, b);
}

inline Natural lcm(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

inline Natural pow_mod(const Natural& base, const Natural& exp,
                       const Natural& modulus) {
  if (modulus == 0) {
    throw DomainError("pow_mod: modulus must be at least 1");
  }
  if (fits_u64(modulus) && fits_u64(exp)) {
    const auto m = modulus.convert_to<std::uint64_t>();
    const auto b = static_cast<std::uint64_t>(base % modulus);
    return Natural(detail::pow_mod(b, exp.convert_to<std::uint64_t>(), m));
  }
  if (exp == 0) return Natural(1) % modulus;
  return boost::multiprecision::powm(base % modulus, exp, modulus);
}

// Largest e with p^e | n.
inline unsigned valuation(const Natural& p, const Natural& n) {
  if (p < 2) throw DomainError("valuation: base must be a prime");
  if (n == 0) throw DomainError("valuation: undefined for 0");
  if (fits_u64(n) && fits_u64(p)) {
    const auto pp = p.convert_to<std::uint64_t>();
    auto m = n.convert_to<std::uint64_t>();
    unsigned e = 0;
    while (m % pp == 0) {
      m /= pp;
      ++e;
    }
    return e;
  }
  Natural m = n;
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

// (b^k - 1) mod N computed without materializing b^k.
inline Natural pow_minus_one_mod(const Natural& b, const Natural& k,
                                 const Natural& modulus) {
  return (pow_mod(b, k, modulus) + modulus - 1) % modulus;
}

// gcd(b^k - 1, N) via a residue mod N.
inline Natural gcd_pow_minus_one(const Natural& b, const Natural& k,
                                 const Natural& modulus) {
  return gcd(pow_minus_one_mod(b, k, modulus), modulus);
}

// Exact below 2^64 (deterministic Miller-Rabin); above, a strong test with
// twenty prime bases whose positive answer is reported as probable_prime.
inline Primality primality(const Natural& n) {
  if (n < 2) return Primality::composite;
  if (fits_u64(n)) {
    return detail::is_prime_u64(n.convert_to<std::uint64_t>())
               ? Primality::prime
               : Primality::composite;
  }
  for (std::uint32_t p : detail::small_primes()) {
    if (n % p == 0) return Primality::composite;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                          47, 53, 59, 61, 67, 71}) {
    if (!detail::strong_probable_prime(n, Natural(a))) {
      return Primality::composite;
    }
  }
  return Primality::probable_prime;
}

inline bool is_prime(const Natural& n) {
  return primality(n) != Primality::composite;
}

// Trial division by primes below 1000, then Pollard-Brent rho on the
// remaining cofactor with a primality check at every split.
inline Factorization factor(const Natural& n) {
  if (n <= 0) throw DomainError("factor: n must be at least 1");
  Factorization result;
  Natural rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (Natural(p) * p > rest) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) result.factors.push_back({Natural(p), e});
  }
  if (rest == 1) return result;

  std::vector<Natural> large;
  detail::collect(rest, large, result.probable);
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

// All positive divisors in increasing order.
inline std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t count = out.size();
    Natural power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Natural> divisors(const Natural& n) {
  return divisors(factor(n));
}

}  // namespace midylab
