#include <gtest/gtest.h>

#include "midylab/midy.hpp"

namespace midylab {
namespace {

std::vector<Natural> V(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

TEST(Ppl2, Examples) {
  EXPECT_TRUE(midy_check_ppl2(10, 13, 2).holds);
  EXPECT_TRUE(midy_check_ppl2(8, 75, 4).holds);

  const auto v = midy_check_ppl2(8, 75, 10);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.method, Method::ppl2);
  const auto& w = std::get<PrimeWitness>(*v.certificate);
  EXPECT_EQ(w.prime, 3);
  EXPECT_EQ(w.nu_n, 1u);
  EXPECT_EQ(w.nu_d, 0u);
}

TEST(Ppl2, Preconditions) {
  EXPECT_THROW(midy_check_ppl2(10, 13, 1), PreconditionError);
  EXPECT_THROW(midy_check_ppl2(10, 13, 4), PreconditionError);
  EXPECT_THROW(midy_check_ppl2(10, 26, 2), PreconditionError);
}

TEST(Ppl2, PassingVerdictCarriesGcd) {
  const auto v = midy_check_ppl2(8, 75, 4);
  EXPECT_EQ(std::get<GcdWitness>(*v.certificate).g, 1);  // gcd(8^5 - 1, 75)
}

TEST(Ppl3, Examples) {
  EXPECT_TRUE(midy_check_ppl3(10, 13, 3).holds);
  EXPECT_FALSE(midy_check_ppl3(8, 75, 5).holds);
  EXPECT_TRUE(midy_check_ppl3(10, 13, 6).holds);
}

TEST(MidySet, Examples) {
  EXPECT_EQ(midy_set(10, 13).members, V({2, 3, 6}));
  EXPECT_EQ(midy_set(8, 75).members, V({4, 20}));
  EXPECT_EQ(midy_set(8, 75).order, 20);
  EXPECT_TRUE(midy_set(10, 3).members.empty());
  EXPECT_THROW(midy_set(10, 14), PreconditionError);
}

TEST(Guel, Examples) {
  const auto a = guel_triple(10, 13, 6);
  EXPECT_TRUE(a.coprime && a.midy && a.witnessed);
  const auto b = guel_triple(8, 75, 5);
  EXPECT_FALSE(b.coprime || b.midy || b.witnessed);
  const auto c = guel_triple(10, 13, 2);
  EXPECT_TRUE(c.coprime && c.midy && c.witnessed);
}

TEST(Guel, HypothesisGateIsDistinctError) {
  // v_3(21) = 1 = v_3(3).
  EXPECT_THROW(guel_triple(10, 21, 3), HypothesisNotApplicable);
  try {
    guel_triple(10, 21, 3);
  } catch (const PreconditionError&) {
    FAIL() << "hypothesis failure reported as a precondition error";
  } catch (const HypothesisNotApplicable&) {
  }
  EXPECT_THROW(guel_triple(10, 13, 4), PreconditionError);
}

// Small cross-section of the full oracle sweep run by the acceptance suite.
class DeciderAgreement : public ::testing::TestWithParam<int> {};

TEST_P(DeciderAgreement, Ppl2Ppl3DirectAgree) {
  const int b = GetParam();
  for (int n = 2; n <= 400; ++n) {
    if (gcd(b, n) != 1) continue;
    const auto ctx = make_context(b, n);
    for (const auto& [d, direct] : midy_direct_all(b, n)) {
      const auto p2 = midy_check_ppl2(ctx, d);
      const auto p3 = midy_check_ppl3(ctx, d);
      const auto p3d = midy_check_ppl3(ctx, d, WitnessRange::d_divisors);
      ASSERT_EQ(p2.holds, direct.holds) << b << ' ' << n << ' ' << d;
      ASSERT_EQ(p3.holds, direct.holds) << b << ' ' << n << ' ' << d;
      ASSERT_EQ(p3d.holds, direct.holds) << b << ' ' << n << ' ' << d;
      ASSERT_TRUE(reverify(ctx, d, p2));
      ASSERT_TRUE(reverify(ctx, d, p3));
      ASSERT_TRUE(reverify(ctx, d, direct));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Bases, DeciderAgreement,
                         ::testing::Values(2, 3, 7, 8, 10, 11, 15, 16));

// At p = 2 the property can tolerate more than v_2(d) when b^k = 3 (mod 4).
TEST(TwoAdic, ExtraAllowance) {
  EXPECT_TRUE(midy_direct(3, 4, 2).holds);
  const auto p2 = midy_check_ppl2(3, 4, 2);
  EXPECT_TRUE(p2.holds);
  EXPECT_EQ(std::get<GcdWitness>(*p2.certificate).g, 2);
  EXPECT_TRUE(midy_check_ppl3(3, 4, 2).holds);
  EXPECT_EQ(midy_set(3, 4).members, std::vector<Natural>{2});
  // 3^1 + 1 = 4, so 2 tolerates v_2(2) + 2 - 1 = 2; 8 needs 3.
  const auto eight = midy_check_ppl2(3, 8, 2);
  ASSERT_FALSE(eight.holds);
  const auto& w = std::get<PrimeWitness>(*eight.certificate);
  EXPECT_EQ(w.nu_n, 3u);
  EXPECT_EQ(w.nu_d, 1u);
  EXPECT_EQ(w.tolerated, 2u);
  EXPECT_FALSE(midy_direct(3, 8, 2).holds);
  // 7 + 1 = 8 tolerates 2^3 at d = 2.
  EXPECT_TRUE(midy_check_ppl2(7, 8, 2).holds);
  EXPECT_TRUE(midy_direct(7, 8, 2).holds);
  // b^k = 1 (mod 4) gives no allowance: |5|_8 = 2, 5 - 1 = 4.
  EXPECT_FALSE(midy_check_ppl2(5, 8, 2).holds);
  EXPECT_FALSE(midy_direct(5, 8, 2).holds);
  EXPECT_THROW(guel_triple(3, 4, 2), HypothesisNotApplicable);
}

TEST(MidySet, UpwardClosed) {
  for (int b : {2, 3, 10}) {
    for (int n = 2; n <= 2000; ++n) {
      if (gcd(b, n) != 1) continue;
      const auto set = midy_set(b, n);
      for (const auto& d1 : set.members) {
        for (const auto& d2 : divisors(set.order)) {
          if (d2 % d1 != 0) continue;
          ASSERT_TRUE(std::binary_search(set.members.begin(), set.members.end(), d2))
              << b << ' ' << n << ' ' << d1 << " | " << d2;
        }
      }
    }
  }
}

// With d = |b|_N the blocks are single digits, so membership means N divides
// the repunit (b^L - 1) / (b - 1). gcd(b - 1, N) = 1 is enough but not
// necessary.
TEST(MidySet, FullOrderMembership) {
  int coprime_members = 0, absorbed = 0;
  for (int b : {2, 3, 8, 10, 16}) {
    for (int n = 2; n <= 2000; ++n) {
      if (gcd(b, n) != 1) continue;
      const auto set = midy_set(b, n);
      if (set.order == 1) continue;
      const bool member =
          std::binary_search(set.members.begin(), set.members.end(), set.order);
      const Natural repunit =
          (boost::multiprecision::pow(Natural(b), to_unsigned(set.order)) - 1) / (b - 1);
      ASSERT_EQ(member, repunit % n == 0) << b << ' ' << n;
      if (gcd(b - 1, n) == 1) {
        ASSERT_TRUE(member) << b << ' ' << n;
        ++coprime_members;
      } else if (member) {
        ++absorbed;
      }
    }
  }
  EXPECT_GT(coprime_members, 0);
  EXPECT_GT(absorbed, 0);
}

TEST(MidySet, FullOrderMemberWithBaseMinusOneSharingAPrime) {
  // |3|_10 = 4 and gcd(2, 10) = 2, yet every digit sum of x/10 is even.
  EXPECT_EQ(gcd(Natural(2), Natural(10)), 2);
  EXPECT_TRUE(midy_direct(3, 10, 4).holds);
  EXPECT_TRUE(midy_check_ppl2(3, 10, 4).holds);
  const auto e = period_digits(1, 10, 3);
  EXPECT_EQ(e.digits, (std::vector<std::uint32_t>{0, 0, 2, 2}));
}

TEST(Guel, ComponentsCoincideUnderHypothesis) {
  int applicable = 0;
  for (int b : {2, 3, 7, 10}) {
    for (int n = 2; n <= 1000; ++n) {
      if (gcd(b, n) != 1) continue;
      const auto ctx = make_context(b, n);
      for (const auto& d : divisors(ctx.order)) {
        if (d < 2) continue;
        try {
          ASSERT_TRUE(guel_triple(ctx, d).consistent()) << b << ' ' << n << ' ' << d;
          ++applicable;
        } catch (const HypothesisNotApplicable&) {
        }
      }
    }
  }
  EXPECT_GT(applicable, 1000);
}

TEST(Reverify, RejectsForgedCertificates) {
  const auto ctx = make_context(8, 75);
  EXPECT_FALSE(reverify(ctx, 10, {false, Method::ppl2, PrimeWitness{5, 2, 0, 0}}));
  EXPECT_FALSE(reverify(ctx, 4, {true, Method::ppl2, GcdWitness{3}}));
  EXPECT_FALSE(reverify(ctx, 4, {false, Method::direct, NumeratorWitness{1}}));
  EXPECT_TRUE(reverify(ctx, 5, {false, Method::direct, NumeratorWitness{1}}));
}

}  // namespace
}  // namespace midylab
