#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencat/quadrature.hpp"
#include "gencat/rational.hpp"

namespace gencat::analytic {

using Complex = std::complex<double>;

enum class DensityKind { Catalan, MarchenkoPastur, W31, W31SymmetricAerated, R3Third, Patalan };

/// A density with a single rational parameter: t for MarchenkoPastur, a for
/// R3Third, p for Patalan; ignored otherwise.
struct DensitySpec {
  DensityKind kind = DensityKind::Catalan;
  Rational param = Rational(1);

  /// "catalan", "mp:<t>", "w31", "w31-sym", "r3third:<a>", "patalan:<p>".
  static DensitySpec parse(std::string_view text);
  std::string to_string() const;
};

/// One piece of the support. The density behaves like (x - lo)^alpha_lo near
/// lo and like (hi - x)^alpha_hi near hi.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  Rational alpha_lo;
  Rational alpha_hi;
};

/// Pieces of the absolutely continuous part, left to right. Validates the
/// parameter (t > 0, a > 0, |p| > 1) and throws DomainError otherwise.
std::vector<Segment> segments(const DensitySpec& spec);

/// Mass of the atom at 0 (nonzero only for MarchenkoPastur with t < 1).
double atom_weight(const DensitySpec& spec);

/// Pointwise density. Throws DomainError unless x lies strictly inside a segment.
double density_eval(const DensitySpec& spec, double x);

/// integral of x^n against the measure (atom included). Endpoint singularities
/// are removed by x = lo + h u^k, x = hi - h u^k with k the denominator of the
/// endpoint exponent. Throws NumericFailure when reltol is not reached.
QuadratureResult moment_by_quadrature(const DensitySpec& spec, unsigned n, double reltol = 1e-10);

// ---------------------------------------------------------------------------
// Closed-form generating functions
// ---------------------------------------------------------------------------

/// Half the smallest nonzero modulus of a critical value of w - a w^2 - b w^3.
double safe_radius_r3(const Rational& a, const Rational& b);

/// D_{a,b}(z) = z C_{a,b}(z) through the sin / cosh / sinh closed forms,
/// (1 - (1 - 3az)^{1/3}) / a on a^2 + 3b = 0, and C_{a,b}(z) = C_{-a,b}(-z)
/// for a < 0. Requires b != 0 and |z| <= safe_radius_r3(a, b).
Complex d_closed_r3(const Rational& a, const Rational& b, Complex z);
/// C_{a,b}(z); C(0) = 1.
Complex c_closed_r3(const Rational& a, const Rational& b, Complex z);

/// Half the smallest nonzero modulus of {(-b^4 - 32 b e^2)/(256 e^3), e/b^2}.
/// Throws DomainError unless b^3 = 4abe + 8e^2 (b, e != 0).
double safe_radius_r4_special(const Rational& a, const Rational& b, const Rational& e);

/// D_{a,b,e}(z) = (-b^2 + sqrt(b^4 + 16be^2 - sgn(e) 16be sqrt(e^2 - b^2 e z))) / (4be)
/// on the subclass b^3 = 4abe + 8e^2 (DomainError otherwise).
Complex d_closed_r4_special(const Rational& a, const Rational& b, const Rational& e, Complex z);
/// C_{a,b,e}(z); C(0) = 1.
Complex c_closed_r4_special(const Rational& a, const Rational& b, const Rational& e, Complex z);

/// |lhs - rhs| / max(1, |lhs|) for the quadratic factorization of
/// w - a w^2 - b w^3 - e w^4 - z on the special subclass.
double eq38_residual(const Rational& a, const Rational& b, const Rational& e, Complex w, Complex z);

/// sum_n c_n z^n by Horner.
Complex series_eval(std::span<const Rational> c, Complex z);

}  // namespace gencat::analytic
