#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gencat {

using BigInt = mpz_class;

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that
/// arithmetic always yields a materialized value (no expression templates
/// leaking through `auto`) and so that division by zero raises DomainError
/// instead of trapping.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<signed long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& v) : value_(v) {}

  /// num/den, canonicalized. Throws DomainError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "+p", "-p" or "p/q" (decimal digits only). Decimal points
  /// and exponents are rejected so that no value is silently rounded.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational abs() const;
  Rational inverse() const;

  /// Integer power; negative exponents invert. 0^0 = 1.
  Rational pow(long exponent) const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

/// Integer binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x, k >= 0.
Rational binomial(const Rational& x, long k);

BigInt factorial(long n);

/// True iff r = s^2 for some rational s; writes s >= 0 when non-null.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

}  // namespace gencat
