#include "genus1/arith.hpp"
#include "genus1/detail/fp_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace genus1;

namespace {

bool trial_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

TEST(Valuation, Rationals) {
  EXPECT_EQ(padic_valuation(BigRat(250), 5), 3);
  EXPECT_EQ(padic_valuation(BigRat(3, 25), 5), -2);
  EXPECT_EQ(padic_valuation(BigRat(7, 3), 5), 0);
  EXPECT_TRUE(padic_valuation(BigRat(0), 5).is_infinite());
  EXPECT_THROW(padic_valuation(BigRat(0), 5).value(), Error);
}

TEST(Valuation, RejectsNonPrime) {
  try {
    padic_valuation(BigRat(12), 6);
    FAIL();
  } catch (const Error &e) {
    EXPECT_STREQ(e.what(), "not a prime: 6");
    EXPECT_EQ(e.where(), "padic_valuation");
  }
}

TEST(Valuation, Additive) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    BigRat a(d(gen) | 1, 1 + (d(gen) & 0xff)), b(d(gen) | 1, 1 + (d(gen) & 0xff));
    for (long p : {2, 3, 5, 7})
      EXPECT_EQ(detail::val(a * b, p), detail::val(a, p) + detail::val(b, p));
  }
}

TEST(Valuation, Ordering) {
  EXPECT_LT(Valuation(3), Valuation::infinity());
  EXPECT_GT(Valuation::infinity(), 1000000L);
  EXPECT_EQ(Valuation::infinity().to_string(), "inf");
}

TEST(Primes, MatchesTrialDivision) {
  for (long n = -5; n < 20000; ++n)
    ASSERT_EQ(is_prime(n), trial_prime(n)) << n;
}

TEST(Primes, Large) {
  EXPECT_TRUE(is_prime(BigInt("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(BigInt("170141183460469231731687303715884105727") * 3));
}

TEST(Factor, Roundtrip) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    BigInt n = BigInt(gen() % 1000000007ULL + 1) * BigInt(gen() % 100003ULL + 1);
    BigInt prod = 1;
    BigInt last = 0;
    for (auto &[q, e] : factor(n)) {
      EXPECT_TRUE(is_prime(q));
      EXPECT_GT(q, last);
      last = q;
      prod *= ipow(q, e);
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Factor, PastTrialBound) {
  BigInt p("1000000007"), q("998244353");
  auto f = factor(p * p * q * 12, 1000);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], (std::pair<BigInt, int>{2, 2}));
  EXPECT_EQ(f[1], (std::pair<BigInt, int>{3, 1}));
  EXPECT_EQ(f[2], (std::pair<BigInt, int>{q, 1}));
  EXPECT_EQ(f[3], (std::pair<BigInt, int>{p, 2}));
  EXPECT_THROW(factor(0), Error);
}

TEST(Residues, LegendreAgreesWithSquares) {
  for (long p : {3, 5, 7, 11, 13, 101}) {
    std::vector<bool> sq(p);
    for (long x = 1; x < p; ++x)
      sq[x * x % p] = true;
    for (long a = 0; a < p; ++a) {
      int expect = a == 0 ? 0 : (sq[a] ? 1 : -1);
      EXPECT_EQ(legendre(a, p), expect);
      auto r = sqrt_mod(a, p);
      EXPECT_EQ(r.has_value(), expect >= 0);
      if (r)
        EXPECT_EQ(mod(*r * *r - a, BigInt(p)), 0);
    }
  }
}

TEST(Residues, RationalMod) {
  EXPECT_EQ(rat_mod(BigRat(1, 2), 7), 4);
  EXPECT_EQ(rat_mod(BigRat(-3), 7), 4);
  EXPECT_THROW(rat_mod(BigRat(1, 7), 7), Error);
  EXPECT_EQ(inverse_mod(3, 10), 7);
}

TEST(Parse, IntegersAndRationals) {
  EXPECT_EQ(parse_int(" -617 "), -617);
  EXPECT_EQ(parse_rational("6/-4"), BigRat(-3, 2));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_int("1.5"), Error);
  EXPECT_THROW(parse_int(""), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(FpPoly, RootsWithMultiplicity) {
  // (x - 1)^2 (x - 3) = x^3 - 5x^2 + 7x - 3
  detail::FpPoly f({BigInt(-3), BigInt(7), BigInt(-5), BigInt(1)}, 7);
  auto rm = detail::roots_with_multiplicity(f);
  ASSERT_EQ(rm.size(), 2u);
  EXPECT_EQ(rm[0], (std::pair<BigInt, int>{1, 2}));
  EXPECT_EQ(rm[1], (std::pair<BigInt, int>{3, 1}));
}

TEST(FpPoly, SplittingLargePrime) {
  const BigInt p("1000000007");
  std::vector<BigInt> roots{5, 77777, BigInt("999999999")};
  detail::FpPoly f({1}, p);
  for (const auto &r : roots)
    f = f * detail::FpPoly({BigInt(-r), 1}, p);
  f = f * detail::FpPoly({1, 0, 1}, p); // x^2 + 1 has no root since p = 3 mod 4
  EXPECT_EQ(detail::roots_mod_p(f), roots);
}
