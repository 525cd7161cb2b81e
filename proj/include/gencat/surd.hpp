#pragma once

#include <complex>
#include <string>

#include "gencat/rational.hpp"

namespace gencat {

/// Element x + y*sqrt(d) of the quadratic extension Q(sqrt(d)).
///
/// d may be negative (then sqrt(d) is the imaginary unit times sqrt(|d|)).
/// When d is the square of a rational the value is folded into x and y = 0,
/// so equality of folded surds is equality of numbers.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& x, const Rational& y, const Rational& d);

  /// sqrt(d) itself.
  static Surd sqrt_of(const Rational& d) { return Surd(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return x_; }
  const Rational& radical_coeff() const { return y_; }
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return y_.is_zero(); }
  /// Exact sign; only meaningful for real surds (d >= 0 or y = 0).
  int sign() const;

  Surd conjugate() const { return Surd(x_, -y_, d_); }
  /// x^2 - d y^2, the field norm; always rational.
  Rational norm() const { return x_ * x_ - d_ * y_ * y_; }
  Surd inverse() const;

  double to_double() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Surd operator-() const { return Surd(-x_, -y_, d_); }
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }
  friend bool operator==(const Surd& a, const Surd& b);

 private:
  Rational x_;
  Rational y_;
  Rational d_;
};

}  // namespace gencat
