#pragma once

#include <span>
#include <vector>

#include "gencat/poly.hpp"
#include "gencat/rational.hpp"

namespace gencat {

/// Power series known through z^order. Binary operations clamp to the
/// smaller order of their operands; nothing is ever extended past what is
/// known.
class TruncatedSeries {
 public:
  /// Zero series known through z^order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// coeffs.size() - 1 becomes the order; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries from_poly(const Poly& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  TruncatedSeries truncate(std::size_t order) const;

  /// 1/s; requires s[0] != 0.
  TruncatedSeries reciprocal() const;
  TruncatedSeries pow(unsigned exponent) const;
  /// this(inner(z)); requires inner[0] == 0.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Compositional inverse: returns w(z) with s(w(z)) = z + O(z^{N+1}), where
/// N = s.order(). Requires s[0] = 0 and s[1] != 0.
TruncatedSeries series_reversion(const TruncatedSeries& s);

}  // namespace gencat
