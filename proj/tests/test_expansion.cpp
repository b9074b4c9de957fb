#include <gtest/gtest.h>

#include <algorithm>

#include "midylab/expansion.hpp"
#include "oracles.hpp"

namespace midylab {
namespace {

std::vector<std::uint32_t> D(std::string_view s) {
  std::vector<std::uint32_t> out;
  for (char c : s) out.push_back(static_cast<std::uint32_t>(c - '0'));
  return out;
}

TEST(PeriodDigits, Examples) {
  EXPECT_EQ(period_digits(1, 13, 10).digits, D("076923"));
  EXPECT_EQ(period_digits(1, 75, 8).digits, D("00664720155164033235"));
  EXPECT_EQ(period_digits(1, 3, 10).digits, D("3"));
}

TEST(PeriodDigits, Preconditions) {
  EXPECT_THROW(period_digits(1, 12, 10), PreconditionError);  // gcd(N, b) > 1
  EXPECT_THROW(period_digits(0, 13, 10), PreconditionError);
  EXPECT_THROW(period_digits(13, 13, 10), PreconditionError);
  EXPECT_THROW(period_digits(3, 21, 10), PreconditionError);  // gcd(x, N) > 1
  EXPECT_THROW(period_digits(1, 13, 1), PreconditionError);
}

TEST(PeriodDigits, LengthIsOrderAndValueIdentity) {
  for (std::uint64_t b : {2, 3, 8, 10, 16}) {
    for (std::uint64_t n = 2; n <= 500; ++n) {
      if (std::gcd(b, n) != 1) continue;
      const auto L = order_mod(b, n);
      const Natural nines = boost::multiprecision::pow(Natural(b), to_unsigned(L)) - 1;
      for (std::uint64_t x = 1; x < n; x += (n > 100 ? 7 : 1)) {
        if (std::gcd(x, n) != 1) continue;
        const auto e = period_digits(x, n, b);
        ASSERT_EQ(e.digits.size(), L) << x << '/' << n << " base " << b;
        ASSERT_EQ(e.value() * n, Natural(x) * nines);
      }
    }
  }
}

TEST(PeriodDigits, PeriodIsMinimal) {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    if (std::gcd<std::uint64_t>(n, 10) != 1) continue;
    const auto e = period_digits(1, n, 10);
    const std::size_t L = e.digits.size();
    for (std::size_t p = 1; p < L; ++p) {
      if (L % p != 0) continue;
      std::vector<std::uint32_t> rotated(L);
      std::rotate_copy(e.digits.begin(), e.digits.begin() + p, e.digits.end(),
                       rotated.begin());
      ASSERT_NE(rotated, e.digits) << n << " has period " << p;
    }
  }
}

TEST(PeriodDigits, MultiplyingByBaseRotatesLeft) {
  for (std::uint64_t b : {2, 10, 16}) {
    for (std::uint64_t n = 3; n <= 400; n += 2) {
      if (std::gcd(b, n) != 1) continue;
      for (std::uint64_t x = 1; x < n; x += 5) {
        if (std::gcd(x, n) != 1) continue;
        auto digits = period_digits(x, n, b).digits;
        std::rotate(digits.begin(), digits.begin() + 1, digits.end());
        ASSERT_EQ(period_digits(x * b % n, n, b).digits, digits);
      }
    }
  }
}

TEST(BlocksAndSum, Examples) {
  const auto thirteen = blocks_and_sum(period_digits(1, 13, 10), 3);
  EXPECT_EQ(thirteen.k, 2u);
  EXPECT_EQ(thirteen.blocks, (std::vector<Natural>{7, 69, 23}));
  EXPECT_EQ(thirteen.sum, 99);

  const auto seventy_five = blocks_and_sum(period_digits(1, 75, 8), 4);
  EXPECT_EQ(seventy_five.sum, 65534);
  EXPECT_EQ(seventy_five.sum, 2 * (boost::multiprecision::pow(Natural(8), 5) - 1));

  const auto e = period_digits(1, 17, 10);
  const auto whole = blocks_and_sum(e, 1);
  ASSERT_EQ(whole.blocks.size(), 1u);
  EXPECT_EQ(whole.blocks[0], e.value());
  EXPECT_EQ(whole.sum, e.value());
}

TEST(BlocksAndSum, NonDivisorRejected) {
  EXPECT_THROW(blocks_and_sum(period_digits(1, 13, 10), 4), PreconditionError);
  EXPECT_THROW(blocks_and_sum(period_digits(1, 13, 10), 0), PreconditionError);
}

TEST(MidyDirect, Examples) {
  EXPECT_TRUE(midy_direct(10, 13, 3).holds);
  EXPECT_TRUE(midy_direct(10, 13, 6).holds);
  const auto v = midy_direct(8, 75, 5);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(std::get<NumeratorWitness>(*v.certificate).x, 1);
}

TEST(MidyDirect, Preconditions) {
  EXPECT_THROW(midy_direct(10, 13, 1), PreconditionError);
  EXPECT_THROW(midy_direct(10, 13, 4), PreconditionError);
  EXPECT_THROW(midy_direct(10, 15, 2), PreconditionError);
}

TEST(MidyDirect, ColumnCheckMatchesMaterializedSums) {
  for (std::uint64_t b : {2, 3, 10}) {
    for (std::uint64_t n = 2; n <= 150; ++n) {
      if (std::gcd(b, n) != 1) continue;
      const std::uint64_t L = oracle::order(b, n);
      const std::uint64_t bits = b == 2 ? 1 : b == 3 ? 2 : 4;
      for (std::uint64_t d = 2; d <= L; ++d) {
        if (L % d != 0 || (L / d) * bits > 120) continue;
        bool expected = true;
        std::uint64_t first_bad = 0;
        for (std::uint64_t x = 1; x < n && expected; ++x) {
          if (std::gcd(x, n) != 1) continue;
          if (!oracle::block_sum_divisible(oracle::digits(x, n, b), L / d, b)) {
            expected = false;
            first_bad = x;
          }
        }
        const auto v = midy_direct(b, n, d);
        ASSERT_EQ(v.holds, expected) << b << ' ' << n << ' ' << d;
        if (!expected) {
          ASSERT_EQ(std::get<NumeratorWitness>(*v.certificate).x, first_bad);
        }
      }
    }
  }
}

TEST(MidyDirect, CertificateIndependentOfJobs) {
  for (std::uint64_t n : {63, 91, 121, 343, 1111}) {
    const auto L = order_mod(10, n);
    for (const auto& d : divisors(L)) {
      if (d < 2) continue;
      const auto one = midy_direct(10, n, d, 1);
      for (unsigned jobs : {2u, 3u, 8u}) {
        const auto many = midy_direct(10, n, d, jobs);
        ASSERT_EQ(one.holds, many.holds);
        if (!one.holds) {
          ASSERT_EQ(std::get<NumeratorWitness>(*one.certificate).x,
                    std::get<NumeratorWitness>(*many.certificate).x);
        }
      }
    }
  }
}

TEST(MidyDirectAll, MatchesSingleDivisorCalls) {
  for (std::uint64_t n : {13, 75, 91, 99, 121, 259}) {
    for (const auto& [d, v] : midy_direct_all(8, n)) {
      const auto single = midy_direct(8, n, d);
      ASSERT_EQ(v.holds, single.holds);
    }
  }
  EXPECT_TRUE(midy_direct_all(10, 3).empty());
}

}  // namespace
}  // namespace midylab
