#pragma once

// Brute-force references for the test suites. Plain machine-word arithmetic
// and definitions only; nothing here calls into the library.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  for (u64 i = 0; i < e; ++i) r = static_cast<u64>((unsigned __int128)r * b % m);
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 i = 2; i * i <= n; ++i) {
    if (n % i == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Least L >= 1 with b^L = 1 (mod n), by successive multiplication.
inline u64 order(u64 b, u64 n) {
  if (n == 1) return 1;
  u64 x = b % n, L = 1;
  while (x != 1) {
    x = static_cast<u64>((unsigned __int128)x * b % n);
    ++L;
  }
  return L;
}

// Digits of x/N until the remainder repeats.
inline std::vector<u64> digits(u64 x, u64 N, u64 b) {
  std::vector<u64> out;
  u64 r = x;
  do {
    out.push_back(r * b / N);
    r = r * b % N;
  } while (r != x);
  return out;
}

// Block sum S_d(x) reduced mod b^k - 1 with k small enough that b^k fits.
inline bool block_sum_divisible(const std::vector<u64>& dg, u64 k, u64 b) {
  unsigned __int128 modulus = 1;
  for (u64 i = 0; i < k; ++i) modulus *= b;
  modulus -= 1;
  unsigned __int128 sum = 0;
  for (u64 j = 0; j < dg.size() / k; ++j) {
    unsigned __int128 block = 0;
    for (u64 i = j * k; i < (j + 1) * k; ++i) block = block * b + dg[i];
    sum = (sum + block % modulus) % modulus;
  }
  return sum == 0;
}

}  // namespace oracle
