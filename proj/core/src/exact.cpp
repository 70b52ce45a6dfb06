#include "mso/exact.hpp"

#include <algorithm>
#include <sstream>

#include "mso/error.hpp"

namespace mso {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text), 10));
    return Rational(BigInt(std::string(text.substr(0, slash)), 10),
                    BigInt(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.q_) == 0) throw Error(ErrorKind::Domain, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r = a;
  r.q_ = -r.q_;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.q_.get_num() == b.q_.get_num() && a.q_.get_den() == b.q_.get_den();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return rational_cmp(a, b);
}

std::strong_ordering rational_cmp(const Rational& a, const Rational& b) {
  // Denominators are positive, so the sign of a.num*b.den - b.num*a.den decides.
  const BigInt lhs = a.num() * b.den();
  const BigInt rhs = b.num() * a.den();
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) throw Error(ErrorKind::Domain, "decimal rendering needs at least one digit");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  BigInt num = value.num();
  const BigInt den = value.den();
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scaled = num * scale;
  BigInt q;
  BigInt r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(BigInt(2 * r), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string body = q.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::geometric(std::size_t k) {
  return IntPolynomial(std::vector<BigInt>(k + 1, BigInt(1)));
}

IntPolynomial IntPolynomial::one_plus_x_pow(std::size_t e) {
  std::vector<BigInt> c(e + 1);
  for (std::size_t i = 0; i <= e; ++i) c[i] = binomial(e, i);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

void IntPolynomial::set_coeff(std::size_t k, const BigInt& value) {
  if (k >= coeffs_.size()) coeffs_.resize(k + 1);
  coeffs_[k] = value;
  trim();
}

void IntPolynomial::add_to_coeff(std::size_t k, const BigInt& value) {
  if (k >= coeffs_.size()) coeffs_.resize(k + 1);
  coeffs_[k] += value;
  trim();
}

bool IntPolynomial::coefficientwise_le(const IntPolynomial& other) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (coeff(k) > other.coeff(k)) return false;
  }
  return true;
}

bool IntPolynomial::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[k] -= o.coeffs_[k];
    if (coeffs_[k] < 0) {
      throw Error(ErrorKind::Domain,
                  "polynomial subtraction produced a negative coefficient at x^" + std::to_string(k));
    }
  }
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << (coeffs_[k] < 0 ? " - " : " + ");
    else if (coeffs_[k] < 0) os << "-";
    first = false;
    const BigInt mag = abs(coeffs_[k]);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

BigInt eval_at_one(const IntPolynomial& p) {
  BigInt s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

BigInt deriv_at_one(const IntPolynomial& p) {
  BigInt s = 0;
  const auto c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) mpz_addmul_ui(s.get_mpz_t(), c[k].get_mpz_t(), k);
  return s;
}

Rational log_deriv_at_one(const IntPolynomial& p) {
  const BigInt total = eval_at_one(p);
  if (total == 0) throw Error(ErrorKind::UndefinedMean, "polynomial vanishes at 1");
  return Rational(deriv_at_one(p), total);
}

}  // namespace mso
