#pragma once

#include <vector>

#include "gencat/param_vec.hpp"
#include "gencat/roots.hpp"

namespace gencat {

/// a1 |> a2: the parameter vector of P_{a2}(P_{a1}(w)). With this order
/// (1) |> (1, 2) = (2, 0, -5, 6, -2), whose moments start 1, 2, 8, 35, 170.
ParamVec mono_conv(const ParamVec& a1, const ParamVec& a2);

/// (alpha1) |> (alpha2) = (alpha1 + alpha2, -2 alpha1 alpha2, alpha1^2 alpha2).
ParamVec alpha_pair(const Rational& alpha1, const Rational& alpha2);

struct NsetCompositionReport {
  std::vector<ComplexValue> lhs;  // critical values of a1 |> a2
  std::vector<ComplexValue> rhs;  // N_{a2} together with P_{a2} applied to N_{a1}
  double hausdorff = 0.0;
  double scaled_hausdorff = 0.0;  // distances divided by max(1, |z|, |z'|)
  bool passed = false;            // scaled_hausdorff <= 10 * tol
};

NsetCompositionReport nset_composition_check(const ParamVec& a1, const ParamVec& a2, double tol = 1e-9);

/// Hausdorff distance between two finite point sets (infinity if exactly one is empty).
double hausdorff_distance(const std::vector<ComplexValue>& x, const std::vector<ComplexValue>& y);
/// Same, with |z - z'| / max(1, |z|, |z'|) as the point distance. Large
/// critical values only carry relative accuracy in double precision.
double scaled_hausdorff_distance(const std::vector<ComplexValue>& x, const std::vector<ComplexValue>& y);

}  // namespace gencat
