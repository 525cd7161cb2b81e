#include "gencat/surd.hpp"

#include <cmath>

#include "gencat/errors.hpp"

namespace gencat {

namespace {

// Radicand shared by two operands; rational operands adopt the other's.
Rational common_radicand(const Surd& a, const Surd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  if (a.radicand() != b.radicand()) throw DomainError("surds over different quadratic fields");
  return a.radicand();
}

}  // namespace

Surd::Surd(const Rational& x, const Rational& y, const Rational& d) : x_(x), y_(y), d_(d) {
  Rational root;
  if (!y_.is_zero() && is_rational_square(d_, &root)) {
    x_ += y_ * root;
    y_ = Rational(0);
  }
  if (y_.is_zero()) d_ = Rational(0);
}

int Surd::sign() const {
  if (y_.is_zero()) return x_.sign();
  if (d_.sign() < 0) throw DomainError("sign of a non-real surd");
  const int sx = x_.sign();
  const int sy = y_.sign();
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare x^2 with d*y^2.
  const Rational diff = x_ * x_ - d_ * y_ * y_;
  return diff.sign() * sx;
}

Surd Surd::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DomainError("inverse of a zero surd");
  return Surd(x_ / n, -y_ / n, d_);
}

double Surd::to_double() const {
  if (y_.is_zero()) return x_.to_double();
  if (d_.sign() < 0) throw DomainError("non-real surd has no real value");
  return x_.to_double() + y_.to_double() * std::sqrt(d_.to_double());
}

std::complex<double> Surd::to_complex() const {
  if (y_.is_zero()) return {x_.to_double(), 0.0};
  const double root = std::sqrt(std::abs(d_.to_double()));
  if (d_.sign() < 0) return {x_.to_double(), y_.to_double() * root};
  return {x_.to_double() + y_.to_double() * root, 0.0};
}

std::string Surd::to_string() const {
  if (y_.is_zero()) return x_.to_string();
  std::string out = x_.is_zero() ? std::string() : x_.to_string() + (y_.sign() < 0 ? " - " : " + ");
  const Rational mag = x_.is_zero() ? y_ : y_.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  return out + "sqrt(" + d_.to_string() + ")";
}

Surd operator+(const Surd& a, const Surd& b) {
  const Rational d = common_radicand(a, b);
  return Surd(a.x_ + b.x_, a.y_ + b.y_, d);
}

Surd operator*(const Surd& a, const Surd& b) {
  const Rational d = common_radicand(a, b);
  return Surd(a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d);
}

bool operator==(const Surd& a, const Surd& b) { return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_; }

}  // namespace gencat
