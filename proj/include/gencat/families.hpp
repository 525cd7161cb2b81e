#pragma once

#include <cstddef>

#include "gencat/moments.hpp"
#include "gencat/param_vec.hpp"

namespace gencat {

/// Raney number C(np + r, n) * r / (np + r), generalized binomial for rational
/// p, r. Throws DomainError when np + r = 0.
Rational fuss_raney(const Rational& p, const Rational& r, long n);

/// a_k = C(p-1, k-1) (-1)^k, k = 2..p: P_a(w) = w (1 - w)^{p-1}, whose
/// moments are the Raney numbers with (p, r) = (p, p - 1).
ParamVec fuss_param_vec(int p);

/// a_k = (-p)^k / p^2 * C(p, k), k = 2..p, integer p >= 2: the parameter
/// vector whose moments are the Patalan numbers of order p.
ParamVec patalan_param_vec(int p);

/// pat_n(p) = -p^{2n+1} C(n - 1/p, n + 1) for n = 0..n_max, p != 0.
MomentTable patalan_moments(const Rational& p, std::size_t n_max);

/// (1)^{>k}: the k-fold composition P_1 o ... o P_1 as a parameter vector.
ParamVec mono_power_param_vec(int k);

}  // namespace gencat
