#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencat/poly.hpp"
#include "gencat/rational.hpp"

namespace gencat {

/// Parameter vector a = (a_2, ..., a_r) defining P_a(w) = w - a_2 w^2 - ... - a_r w^r.
///
/// Trailing zeros are trimmed so a_r != 0; interior zeros are kept
/// (e.g. (0, 2, 0, -1)). The all-zero vector is rejected.
class ParamVec {
 public:
  explicit ParamVec(std::vector<Rational> coeffs);
  ParamVec(std::initializer_list<Rational> coeffs) : ParamVec(std::vector<Rational>(coeffs)) {}

  /// Comma-separated rational literals, e.g. "1,1,-1" or "2,-1/4".
  static ParamVec parse(std::string_view csv);

  /// Inverse of poly(): p must have p(0) = 0, p'(0) = 1 and degree >= 2.
  static ParamVec from_poly(const Poly& p);

  /// Largest index r (so the vector holds a_2..a_r).
  std::size_t r() const { return coeffs_.size() + 1; }
  /// a_j for 2 <= j; zero past r.
  Rational a(std::size_t j) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly poly() const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const ParamVec& x, const ParamVec& y) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace gencat
