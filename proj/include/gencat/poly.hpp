#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gencat/rational.hpp"

namespace gencat {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] is the coefficient of w^i; there is never a trailing zero,
/// so the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, std::size_t degree);
  /// The identity polynomial w.
  static Poly identity() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of w^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;
  /// Floating-point Horner evaluation, used by the numeric companions.
  std::complex<double> operator()(std::complex<double> x) const;

  Poly derivative() const;
  /// this(inner(w)).
  Poly compose(const Poly& inner) const;
  Poly monic() const;

  std::vector<double> to_doubles() const;
  /// Human-readable form, e.g. "w - 2*w^2 + 1/3*w^3".
  std::string to_string(char var = 'w') const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

inline Poly compose(const Poly& outer, const Poly& inner) { return outer.compose(inner); }

}  // namespace gencat
