#include "gencat/rational.hpp"

#include <cctype>

#include "gencat/errors.hpp"

namespace gencat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("invalid rational literal '" + std::string(text) +
                     "' (expected p or p/q with decimal integers)");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("invalid rational literal '" + std::string(text) + "' (zero denominator)");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r(num, den);
  return Rational(std::move(r));  // already canonical
}

Rational Rational::operator-() const {
  mpq_class r = -value_;
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw DomainError("integer binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= x - Rational(i);
  return acc / Rational(factorial(k));
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool is_rational_square(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  if (root != nullptr) {
    BigInt sn;
    BigInt sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(sn, sd);
  }
  return true;
}

}  // namespace gencat
