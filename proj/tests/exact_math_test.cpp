#include <random>
#include <string>

#include <gtest/gtest.h>

#include "mso/error.hpp"
#include "mso/exact.hpp"

namespace mso {
namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(0, 1000);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() += 1;  // keep p(1) > 0
  return IntPolynomial(std::move(c));
}

TEST(PolyTest, MultiplicationExamples) {
  const IntPolynomial x = IntPolynomial::monomial(1);
  EXPECT_EQ(poly_mul(x, x), IntPolynomial::monomial(2));
  const IntPolynomial one_plus_x{1, 1};
  EXPECT_EQ(poly_mul(one_plus_x, one_plus_x), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(IntPolynomial::one_plus_x_pow(2), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(poly_add(IntPolynomial{1, 2}, IntPolynomial{0, 0, 3}), (IntPolynomial{1, 2, 3}));
}

TEST(PolyTest, DegreeOfProductIsSumOfDegrees) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng, 12);
    const auto b = random_poly(rng, 12);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
  EXPECT_TRUE((IntPolynomial{} * IntPolynomial{1, 2}).is_zero());
}

TEST(PolyTest, BroomEdgeProductEvaluatesToBinomialTimesPowerOfTwo) {
  // (1+x)^{2s} * x^2 sum (i+1) x^i at 1 is C(L,2) 2^{2s} with L the cycle length.
  for (std::size_t len = 3; len <= 12; ++len) {
    std::vector<BigInt> cyc(len + 1);
    for (std::size_t i = 0; i + 2 <= len; ++i) cyc[i + 2] = static_cast<unsigned long>(i + 1);
    for (std::size_t s = 0; s <= 6; ++s) {
      const IntPolynomial product = IntPolynomial::one_plus_x_pow(2 * s) * IntPolynomial(cyc);
      EXPECT_EQ(eval_at_one(product), binomial(len, 2) * pow2(2 * s)) << "L=" << len << " s=" << s;
    }
  }
}

TEST(PolyTest, EvalAndDerivAtOne) {
  const IntPolynomial p3{0, 3, 2, 1};
  EXPECT_EQ(eval_at_one(p3), 6);
  EXPECT_EQ(deriv_at_one(p3), 10);
  EXPECT_EQ(eval_at_one(IntPolynomial{}), 0);
  EXPECT_EQ(deriv_at_one(IntPolynomial{}), 0);
  // Local polynomial of C_5 at an edge: x^2 (1 + 2x + 3x^2 + 4x^3).
  const IntPolynomial c5e{0, 0, 1, 2, 3, 4};
  EXPECT_EQ(eval_at_one(c5e), 10);
  EXPECT_EQ(deriv_at_one(c5e), 5 * 4 * 12 / 6);
}

TEST(PolyTest, EvalAndDerivAreLinear) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng, 15);
    const auto b = random_poly(rng, 15);
    EXPECT_EQ(eval_at_one(a + b), eval_at_one(a) + eval_at_one(b));
    EXPECT_EQ(deriv_at_one(a + b), deriv_at_one(a) + deriv_at_one(b));
  }
}

TEST(PolyTest, SubtractionRefusesNegativeCoefficients) {
  EXPECT_EQ(IntPolynomial({0, 3, 2}) - IntPolynomial({0, 1, 2}), (IntPolynomial{0, 2}));
  try {
    (void)(IntPolynomial{0, 1} - IntPolynomial{0, 2});
    FAIL() << "expected a domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(PolyTest, Rendering) {
  EXPECT_EQ((IntPolynomial{0, 3, 2, 1}).str(), "3x + 2x^2 + x^3");
  EXPECT_EQ(IntPolynomial{}.str(), "0");
}

TEST(LogDerivTest, GeometricSumHasHalfDegreeMean) {
  for (std::size_t k = 0; k <= 40; ++k) {
    EXPECT_EQ(log_deriv_at_one(IntPolynomial::geometric(k)), Rational(BigInt(k), BigInt(2))) << k;
  }
}

TEST(LogDerivTest, MonomialMeanIsItsDegree) {
  for (std::size_t m = 0; m <= 10; ++m) {
    EXPECT_EQ(log_deriv_at_one(IntPolynomial::monomial(m, 5)), Rational(static_cast<long>(m)));
  }
}

TEST(LogDerivTest, ProductRuleIsExact) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_poly(rng, 10);
    const auto h = random_poly(rng, 10);
    EXPECT_EQ(log_deriv_at_one(g * h), log_deriv_at_one(g) + log_deriv_at_one(h));
  }
}

TEST(LogDerivTest, ZeroAtOneIsUndefined) {
  try {
    (void)log_deriv_at_one(IntPolynomial{});
    FAIL() << "expected undefined-mean";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedMean);
  }
}

TEST(RationalTest, Normalizes) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, CompareExamples) {
  EXPECT_EQ(rational_cmp(Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(6))),
            std::strong_ordering::equal);
  // mu(C3) = 2 against mu(P3) = 5/3.
  EXPECT_EQ(rational_cmp(Rational(2), Rational(BigInt(5), BigInt(3))), std::strong_ordering::greater);
  // Change in mean when the a-b edge is added to the order-7 counterexample.
  const Rational delta(BigInt(-52), BigInt(88385));
  EXPECT_EQ(rational_cmp(delta, Rational(0)), std::strong_ordering::less);
}

TEST(RationalTest, ArithmeticSatisfiesCrossMultiplication) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational sum = Rational(BigInt(a), BigInt(b)) + Rational(BigInt(c), BigInt(d));
    EXPECT_EQ(sum.num() * b * d, (BigInt(a) * d + BigInt(c) * b) * sum.den());
    EXPECT_EQ(gcd(sum.num(), sum.den()), 1);
    EXPECT_GT(sum.den(), 0);
    const Rational prod = Rational(BigInt(a), BigInt(b)) * Rational(BigInt(c), BigInt(d));
    EXPECT_EQ(prod.num() * b * d, BigInt(a) * c * prod.den());
  }
}

TEST(RationalTest, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("-52/88385"), Rational(BigInt(-52), BigInt(88385)));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("x/2"), Error);
}

TEST(DecimalTest, Examples) {
  EXPECT_EQ(to_decimal(Rational(BigInt(1), BigInt(3)), 6), "0.333333");
  EXPECT_EQ(to_decimal(Rational(BigInt(5), BigInt(3)), 4), "1.6667");
  EXPECT_EQ(to_decimal(Rational(BigInt(-52), BigInt(88385)), 6), "-0.000588");
  EXPECT_EQ(to_decimal(Rational(3), 2), "3.00");
  EXPECT_EQ(to_decimal(Rational(BigInt(-1), BigInt(10000000)), 3), "0.000");
}

TEST(DecimalTest, TiesRoundToEven) {
  EXPECT_EQ(to_decimal(Rational(BigInt(1), BigInt(8)), 2), "0.12");
  EXPECT_EQ(to_decimal(Rational(BigInt(3), BigInt(8)), 2), "0.38");
  EXPECT_EQ(to_decimal(Rational(BigInt(-5), BigInt(8)), 2), "-0.62");
  EXPECT_EQ(to_decimal(Rational(BigInt(1), BigInt(2)), 1), "0.5");
  EXPECT_EQ(to_decimal(Rational(BigInt(25), BigInt(1000)), 2), "0.02");
  EXPECT_EQ(to_decimal(Rational(BigInt(35), BigInt(1000)), 2), "0.04");
}

TEST(DecimalTest, RenderedValueIsWithinOneUlpOfTheRational) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-10000000, 10000000);
  std::uniform_int_distribution<long> den(1, 999983);
  std::uniform_int_distribution<int> digits(1, 12);
  for (int i = 0; i < 300; ++i) {
    const Rational q(BigInt(num(rng)), BigInt(den(rng)));
    const int d = digits(rng);
    std::string text = to_decimal(q, d);
    const bool neg = text.front() == '-';
    if (neg) text.erase(0, 1);
    const auto dot = text.find('.');
    ASSERT_NE(dot, std::string::npos);
    ASSERT_EQ(text.size() - dot - 1, static_cast<std::size_t>(d));
    BigInt scaled(text.substr(0, dot) + text.substr(dot + 1), 10);
    if (neg) scaled = -scaled;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(d));
    const Rational back(scaled, scale);
    Rational err = back - q;
    if (err.sign() < 0) err = -err;
    EXPECT_LE(err, Rational(BigInt(1), scale)) << q.str() << " -> " << to_decimal(q, d);
  }
}

TEST(DecimalTest, RejectsZeroDigits) { EXPECT_THROW(to_decimal(Rational(1), 0), Error); }

}  // namespace
}  // namespace mso
