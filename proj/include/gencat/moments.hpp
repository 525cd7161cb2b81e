#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gencat/param_vec.hpp"
#include "gencat/rational.hpp"
#include "gencat/surd.hpp"

namespace gencat {

enum class MomentSource {
  Recurrence,
  Reversion,
  ClosedFormR3,
  FreePower,
  FromCumulants,
  FamilyFormula,
};

std::string to_string(MomentSource source);

/// c_0..c_N together with the method that produced them.
struct MomentTable {
  std::vector<Rational> terms;
  MomentSource source = MomentSource::Recurrence;
  std::optional<Rational> free_power;  // t, for MomentSource::FreePower

  std::size_t size() const { return terms.size(); }
  const Rational& operator[](std::size_t n) const { return terms.at(n); }
};

/// Free cumulants kappa_1..kappa_N (kappa_0 is not stored).
struct CumulantTable {
  std::vector<Rational> terms;

  std::size_t size() const { return terms.size(); }
  /// kappa_n, 1-based.
  const Rational& kappa(std::size_t n) const { return terms.at(n - 1); }
};

/// c_0..c_N from the defining recurrence
///   c_n = sum_j a_j * sum_{u_1+..+u_j = n-j+1} c_{u_1} ... c_{u_j},
/// evaluated by maintaining the convolution powers of the known prefix.
MomentTable moments_recurrence(const ParamVec& a, std::size_t n_max);

/// c_n = [z^{n+1}] of the compositional inverse of P_a.
MomentTable moments_via_reversion(const ParamVec& a, std::size_t n_max);

/// Closed form for r = 3 (b may be zero):
///   c_n = 1/(n+1) sum_j C(2n-j, n) C(n-j, j) a^{n-2j} b^j.
MomentTable moments_r3(const Rational& a, const Rational& b, std::size_t n_max);

/// (d a_2, d^2 a_3, ..., d^{r-1} a_r); then c_n(result) = d^n c_n(a).
ParamVec dilate(const ParamVec& a, const Rational& d);

/// kappa_n = [z^n] Q/(1-Q), Q(z) = a_2 z + ... + a_r z^{r-1}.
CumulantTable cumulants(const ParamVec& a, std::size_t n_max);

/// Moments solving 1 + R(z C(z)) = C(z) for the given cumulants.
/// Requires n_max <= k.size().
MomentTable moments_from_cumulants(const CumulantTable& k, std::size_t n_max);

enum class FreePowerRoute {
  Reversion,  // invert z = P_a(w) / (1 + (t-1)(a_2 w + ... + a_r w^{r-1}))
  Cumulants,  // moments_from_cumulants(t * kappa)
};

/// Moments of the free convolution power with R-transform t * R_a. Requires t > 0.
MomentTable free_power_moments(const ParamVec& a, const Rational& t, std::size_t n_max,
                               FreePowerRoute route = FreePowerRoute::Reversion);

/// kappa_n(a, b) = sum_k C(n-k, k) a^{n-2k} b^k (the coefficients of 1/(1 - a z - b z^2)).
Rational kappa_r3(const Rational& a, const Rational& b, std::size_t n);

/// Binet form kappa_n = t_- u_-^n + t_+ u_+^n for a^2 + 4b > 0, b != 0.
/// All quantities live in Q(sqrt(a^2 + 4b)); kappa is exact and rational.
struct BinetTerms {
  Surd t_minus;
  Surd t_plus;
  Surd u_minus;
  Surd u_plus;
  Surd kappa;
  double kappa_double = 0.0;  // the same sum evaluated in double precision
};

BinetTerms cumulants_r3_binet(const Rational& a, const Rational& b, std::size_t n);

}  // namespace gencat
