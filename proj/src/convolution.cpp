#include "gencat/convolution.hpp"

#include <algorithm>
#include <limits>

#include "gencat/errors.hpp"
#include "gencat/positivity.hpp"

namespace gencat {

ParamVec mono_conv(const ParamVec& a1, const ParamVec& a2) { return ParamVec::from_poly(a2.poly().compose(a1.poly())); }

ParamVec alpha_pair(const Rational& alpha1, const Rational& alpha2) {
  if (alpha1.is_zero() || alpha2.is_zero()) throw DomainError("alpha_pair needs nonzero arguments");
  return ParamVec({alpha1 + alpha2, Rational(-2) * alpha1 * alpha2, alpha1 * alpha1 * alpha2});
}

namespace {

template <class Dist>
double hausdorff(const std::vector<ComplexValue>& x, const std::vector<ComplexValue>& y, Dist dist) {
  if (x.empty() && y.empty()) return 0.0;
  if (x.empty() || y.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [&dist](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(x, y), directed(y, x));
}

}  // namespace

double hausdorff_distance(const std::vector<ComplexValue>& x, const std::vector<ComplexValue>& y) {
  return hausdorff(x, y, [](ComplexValue p, ComplexValue q) { return std::abs(p - q); });
}

double scaled_hausdorff_distance(const std::vector<ComplexValue>& x, const std::vector<ComplexValue>& y) {
  return hausdorff(x, y, [](ComplexValue p, ComplexValue q) {
    return std::abs(p - q) / std::max({1.0, std::abs(p), std::abs(q)});
  });
}

NsetCompositionReport nset_composition_check(const ParamVec& a1, const ParamVec& a2, double tol) {
  NsetCompositionReport rep;
  rep.lhs = positivity::critical_values(mono_conv(a1, a2)).distinct_values();
  rep.rhs = positivity::critical_values(a2).distinct_values();
  const Poly p2 = a2.poly();
  for (const ComplexValue& z : positivity::critical_values(a1).distinct_values()) rep.rhs.push_back(p2(z));
  rep.hausdorff = hausdorff_distance(rep.lhs, rep.rhs);
  rep.scaled_hausdorff = scaled_hausdorff_distance(rep.lhs, rep.rhs);
  rep.passed = rep.scaled_hausdorff <= 10.0 * tol;
  return rep;
}

}  // namespace gencat
