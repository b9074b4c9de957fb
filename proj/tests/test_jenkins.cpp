#include <gtest/gtest.h>

#include "midylab/jenkins.hpp"
#include "oracles.hpp"

namespace midylab {
namespace {

JenkinsInstance make(int b, int d, std::vector<std::pair<int, unsigned>> ps) {
  std::vector<PrimePower> primes;
  for (auto [p, h] : ps) primes.push_back({Natural(p), h});
  return JenkinsInstance::make(b, d, primes);
}

TEST(Jenkins, Examples) {
  EXPECT_TRUE(jenkins_check(make(10, 3, {{7, 1}, {13, 1}})));
  EXPECT_FALSE(jenkins_check(make(10, 2, {{11, 1}, {101, 1}})));
  EXPECT_TRUE(jenkins_check(make(10, 3, {{13, 5}})));
  EXPECT_TRUE(midy_check_ppl2(10, 371293, 3).holds);  // 13^5
}

TEST(JenkinsGcd, Examples) {
  EXPECT_TRUE(jenkins_check_gcd(make(10, 3, {{7, 1}, {13, 1}})));
  EXPECT_FALSE(jenkins_check_gcd(make(10, 2, {{11, 1}, {101, 1}})));
  EXPECT_FALSE(jenkins_check_gcd(make(10, 2, {{11, 3}, {101, 2}})));
  EXPECT_EQ(gcd_pow_minus_one(10, 2, 1111), 11);
}

TEST(Jenkins, HypothesisChecks) {
  EXPECT_THROW(make(10, 4, {{13, 1}}), PreconditionError);   // 4 does not divide 6
  EXPECT_THROW(make(10, 2, {{13, 1}, {13, 2}}), PreconditionError);
  EXPECT_THROW(make(10, 2, {{15, 1}}), PreconditionError);
  EXPECT_THROW(make(10, 2, {{13, 0}}), PreconditionError);
  EXPECT_THROW(make(10, 1, {{13, 1}}), PreconditionError);
  EXPECT_THROW(make(10, 2, {{5, 1}}), PreconditionError);
}

TEST(JenkinsDecompose, RowsReconstruct) {
  const auto inst = make(10, 6, {{7, 2}, {13, 1}, {19, 3}});
  const auto dec = jenkins_decompose(inst);
  ASSERT_EQ(dec.d_primes.size(), 2u);
  for (std::size_t j = 0; j < dec.rows.size(); ++j) {
    const auto& row = dec.rows[j];
    Natural rebuilt = boost::multiprecision::pow(inst.d(), row.c) * row.y;
    for (std::size_t i = 0; i < dec.d_primes.size(); ++i) {
      rebuilt *= boost::multiprecision::pow(dec.d_primes[i].prime, row.alpha[i]);
      EXPECT_EQ(gcd(row.y, dec.d_primes[i].prime), 1);
    }
    EXPECT_EQ(rebuilt, row.value);
    Natural smooth = 1;
    for (std::size_t i = 0; i < dec.d_primes.size(); ++i) {
      smooth *= boost::multiprecision::pow(dec.d_primes[i].prime, row.alpha[i]);
    }
    EXPECT_NE(smooth % inst.d(), 0);
  }
}

TEST(JenkinsDecompose, ExponentClampWhenHBelowLift) {
  // m = v_3(10 - 1) = 2 for p = 3 is not usable (3 | d impossible), so use
  // p = 487 where m = 2: h = 1 and h = 2 both leave the p-part at 1.
  const auto one = jenkins_decompose(make(10, 2, {{487, 1}}));
  const auto two = jenkins_decompose(make(10, 2, {{487, 2}}));
  const auto three = jenkins_decompose(make(10, 2, {{487, 3}}));
  EXPECT_EQ(one.rows[0].value, 243);
  EXPECT_EQ(two.rows[0].value, 243);
  EXPECT_EQ(three.rows[0].value, 487 * 243);
}

TEST(Jenkins, QValuationOfLiftedPartEqualsThatOfK) {
  for (int b : {2, 10}) {
    for (int d = 2; d <= 12; ++d) {
      for (int p = 3; p <= 200; ++p) {
        if (!oracle::is_prime(p) || b % p == 0 || oracle::order(b, p) % d) continue;
        for (unsigned h = 1; h <= 3; ++h) {
          const auto dec = jenkins_decompose(make(b, d, {{p, h}}));
          for (const auto& q : dec.d_primes) {
            ASSERT_EQ(valuation(q.prime, dec.rows[0].value),
                      valuation(q.prime, Natural(oracle::order(b, p) / d)));
          }
        }
      }
    }
  }
}

TEST(Jenkins, RoutesAgreeAndIgnoreExponents) {
  std::vector<int> primes;
  for (int p = 3; p <= 60; ++p) {
    if (oracle::is_prime(p)) primes.push_back(p);
  }
  int checked = 0;
  for (int b : {2, 10}) {
    for (int d = 2; d <= 12; ++d) {
      std::vector<int> eligible;
      for (int p : primes) {
        if (b % p != 0 && oracle::order(b, p) % d == 0) eligible.push_back(p);
      }
      for (std::size_t i = 0; i < eligible.size(); ++i) {
        for (std::size_t j = i + 1; j < eligible.size(); ++j) {
          std::optional<bool> first;
          for (unsigned h1 = 1; h1 <= 3; ++h1) {
            for (unsigned h2 = 1; h2 <= 3; ++h2) {
              const auto inst = make(b, d, {{eligible[i], h1}, {eligible[j], h2}});
              const bool formula = jenkins_check(inst);
              ASSERT_EQ(formula, jenkins_check_gcd(inst));
              ASSERT_EQ(formula, midy_check_ppl2(b, inst.modulus(), d).holds);
              if (!first) first = formula;
              ASSERT_EQ(*first, formula) << "verdict depends on exponents";
              ++checked;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

}  // namespace
}  // namespace midylab
