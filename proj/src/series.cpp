#include "gencat/series.hpp"

#include <algorithm>

#include "gencat/errors.hpp"

namespace gencat {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coeff(i);
  return s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) throw DomainError("reciprocal of a series with zero constant term");
  const Rational inv0 = coeffs_[0].inverse();
  TruncatedSeries r(order());
  r.coeffs_[0] = inv0;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result(order());
  result.coeffs_[0] = Rational(1);
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (!inner[0].is_zero()) throw DomainError("series composition needs inner(0) = 0");
  const std::size_t n = std::min(order(), inner.order());
  TruncatedSeries acc(n);
  const TruncatedSeries in = inner.truncate(n);
  for (std::size_t i = n + 1; i-- > 0;) {
    acc = acc * in;
    acc.coeffs_[0] += coeffs_[i];
  }
  return acc;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order());
  for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  const std::size_t n = r.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.reciprocal(); }

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] = s * a.coeffs_[i];
  return r;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
  const std::size_t order = s.order();
  if (!s[0].is_zero()) throw DomainError("series reversion needs s(0) = 0");
  if (order < 1 || s[1].is_zero()) throw DomainError("series reversion needs a nonzero linear coefficient");

  // powers[k][m] = [z^m] w(z)^k, filled column by column as w's coefficients
  // become known; [z^n] w^k for k >= 2 only involves w_1..w_{n-1}.
  std::vector<std::vector<Rational>> powers(order + 1, std::vector<Rational>(order + 1));
  std::vector<Rational> w(order + 1);
  const Rational inv1 = s[1].inverse();
  w[1] = inv1;
  powers[1][1] = inv1;
  for (std::size_t n = 2; n <= order; ++n) {
    Rational higher;
    for (std::size_t k = 2; k <= n; ++k) {
      Rational acc;
      for (std::size_t i = k - 1; i + 1 <= n; ++i) acc += powers[k - 1][i] * w[n - i];
      powers[k][n] = acc;
      if (!s[k].is_zero()) higher += s[k] * acc;
    }
    w[n] = -higher * inv1;
    powers[1][n] = w[n];
  }
  return TruncatedSeries(std::move(w));
}

}  // namespace gencat
