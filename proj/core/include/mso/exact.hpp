#pragma once

// Exact arithmetic: big integers, reduced rationals and dense polynomials with
// non-negative coefficients. Nothing in here touches floating point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mso {

using BigInt = mpz_class;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow2(std::uint64_t e);

/// Reduced fraction with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws Domain when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when den == 1.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws Domain on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class q_;
};

/// Three-way comparison by integer cross-multiplication.
std::strong_ordering rational_cmp(const Rational& a, const Rational& b);

/// Half-even rounding to `digits` places after the decimal point.
std::string to_decimal(const Rational& value, int digits);

/// Dense polynomial; coeffs()[k] is the coefficient of x^k. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t degree, const BigInt& coeff = 1);
  /// f_k(x) = 1 + x + ... + x^k.
  static IntPolynomial geometric(std::size_t k);
  /// (1 + x)^e.
  static IntPolynomial one_plus_x_pow(std::size_t e);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  void set_coeff(std::size_t k, const BigInt& value);
  void add_to_coeff(std::size_t k, const BigInt& value);

  bool coefficientwise_le(const IntPolynomial& other) const;
  bool all_nonnegative() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  /// Throws Domain if a coefficient would go negative.
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Human-readable, e.g. "3x + 2x^2 + x^3".
  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// p(1).
BigInt eval_at_one(const IntPolynomial& p);
/// p'(1).
BigInt deriv_at_one(const IntPolynomial& p);
/// p'(1) / p(1). Throws UndefinedMean when p(1) == 0.
Rational log_deriv_at_one(const IntPolynomial& p);

}  // namespace mso
