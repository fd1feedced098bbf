#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qkring/cyclotomic.hpp"
#include "qkring/integer.hpp"
#include "qkring/polynomial.hpp"

using namespace qkring;

TEST(Binomial, StandardValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, LargeValueIsExact) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
}

TEST(Binomial, PascalRule) {
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t r = 1; r < n; ++r) {
      ASSERT_EQ(binomial(n, r), binomial(n - 1, r - 1) + binomial(n - 1, r)) << n << " " << r;
    }
  }
}

TEST(Binomial, NegativeTopIsRejected) { EXPECT_THROW(binomial(-1, 0), std::domain_error); }

TEST(TwoAdicValuation, Values) {
  EXPECT_EQ(two_adic_valuation(8), 3u);
  EXPECT_EQ(two_adic_valuation(12), 2u);
  EXPECT_EQ(two_adic_valuation(-12), 2u);
  EXPECT_EQ(two_adic_valuation(7), 0u);
  // k(2k^2 + 1)/3 at k = 4 is 44 = 4 * 11
  const Integer k = 4;
  EXPECT_EQ(two_adic_valuation(k * (2 * k * k + 1) / 3), 2u);
}

TEST(TwoAdicValuation, ZeroIsAnError) { EXPECT_THROW(two_adic_valuation(0), std::domain_error); }

TEST(ExactLog2, PowersAndNonPowers) {
  EXPECT_EQ(exact_log2(1), 0);
  EXPECT_EQ(exact_log2(pow2(70)), 70);
  EXPECT_EQ(exact_log2(12), -1);
  EXPECT_EQ(exact_log2(0), -1);
}

TEST(RequireInteger, RejectsFractions) {
  EXPECT_EQ(require_integer(Rational(6, 3), "t"), 2);
  EXPECT_THROW(require_integer(Rational(1, 3), "t"), AlgebraError);
}

TEST(ParseInteger, RoundTripAndErrors) {
  EXPECT_EQ(parse_integer("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
}

TEST(Chebyshev, BaseCasesAndRecurrence) {
  EXPECT_EQ(chebyshev_t(0), IntPoly{2});
  EXPECT_EQ(chebyshev_t(1), (IntPoly{0, 1}));
  EXPECT_EQ(chebyshev_t(2), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(chebyshev_t(3), (IntPoly{0, -3, 0, 1}));
  EXPECT_EQ(chebyshev_t(4), (IntPoly{2, 0, -4, 0, 1}));
}

TEST(Chebyshev, ValueAtTwoIsTwo) {
  for (std::size_t i = 0; i <= 80; ++i) ASSERT_EQ(chebyshev_t(i)(2), 2) << i;
}

TEST(Chebyshev, MatchesPowerSumsNumerically) {
  // t_i(z + 1/z) = z^i + z^{-i}; at z = 2 the value 2^i + 2^{-i} scaled by 2^i is 4^i + 1.
  for (std::size_t i = 1; i <= 30; ++i) {
    const IntPoly t = chebyshev_t(i);
    // evaluate 2^i t_i(5/2) = sum c_j 5^j 2^{i-j}
    Integer acc = 0;
    for (std::size_t j = 0; j < t.coeffs().size(); ++j) {
      Integer term = t.coeff(j);
      for (std::size_t e = 0; e < j; ++e) term *= 5;
      for (std::size_t e = j; e < i; ++e) term *= 2;
      acc += term;
    }
    ASSERT_EQ(acc, pow2(static_cast<unsigned>(2 * i)) + 1) << i;
  }
}

TEST(IntPoly, ComposeAndToString) {
  const IntPoly p{0, 0, 1};                // x^2
  const IntPoly shifted = p.compose({2, 1});  // (x + 2)^2
  EXPECT_EQ(shifted, (IntPoly{4, 4, 1}));
  EXPECT_EQ(shifted.to_string(), "x^2 + 4x + 4");
  EXPECT_EQ((IntPoly{0, -1, 0, 1}).to_string("φ"), "φ^3 - φ");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
  EXPECT_EQ(IntPoly{}.degree(), -1);
}

TEST(PhiPoly, RejectsConstantTerm) { EXPECT_THROW(PhiPoly(IntPoly{1, 1}), AlgebraError); }

namespace {
CyclotomicInt random_cyclo(std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-20, 20);
  std::vector<Integer> c(k);
  for (auto& x : c) x = dist(rng);
  return CyclotomicInt(c);
}
}  // namespace

TEST(Cyclotomic, SmallProducts) {
  const std::size_t k = 2;  // zeta = i
  const CyclotomicInt zeta = CyclotomicInt::zeta_power(k, 1);
  const CyclotomicInt one(k, 1);
  EXPECT_EQ(cyclo_mul(zeta, zeta), CyclotomicInt(k, -1));
  EXPECT_EQ(cyclo_mul(one + zeta, one - zeta), CyclotomicInt(k, 2));
  const CyclotomicInt a(std::vector<Integer>{3, -7});
  EXPECT_EQ(cyclo_mul(a, one), a);
}

TEST(Cyclotomic, PowersWrapAround) {
  for (std::size_t k : {2u, 4u, 8u}) {
    const auto m = static_cast<std::int64_t>(2 * k);
    EXPECT_EQ(CyclotomicInt::zeta_power(k, m), CyclotomicInt(k, 1));
    EXPECT_EQ(CyclotomicInt::zeta_power(k, static_cast<std::int64_t>(k)), CyclotomicInt(k, -1));
    EXPECT_EQ(CyclotomicInt::zeta_power(k, -1) * CyclotomicInt::zeta_power(k, 1), CyclotomicInt(k, 1));
    EXPECT_EQ(CyclotomicInt::zeta_power(k, 3).conj(), CyclotomicInt::zeta_power(k, -3));
  }
}

TEST(Cyclotomic, MismatchedKIsAnError) {
  EXPECT_THROW(cyclo_mul(CyclotomicInt(2, 1), CyclotomicInt(4, 1)), std::invalid_argument);
  EXPECT_THROW(CyclotomicInt(0), std::invalid_argument);
}

TEST(Cyclotomic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(17);
  for (std::size_t k : {2u, 4u, 8u, 16u}) {
    for (int t = 0; t < 50; ++t) {
      const auto a = random_cyclo(k, rng);
      const auto b = random_cyclo(k, rng);
      const auto c = random_cyclo(k, rng);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
      CyclotomicInt fused(k);
      fused.add_product(3, a, b);
      ASSERT_EQ(fused, Integer(3) * (a * b));
    }
  }
}
