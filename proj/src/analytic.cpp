#include "gencat/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gencat/errors.hpp"
#include "gencat/positivity.hpp"

namespace gencat::analytic {

namespace {

constexpr double pi = std::numbers::pi;

std::string kind_name(DensityKind k) {
  switch (k) {
    case DensityKind::Catalan: return "catalan";
    case DensityKind::MarchenkoPastur: return "mp";
    case DensityKind::W31: return "w31";
    case DensityKind::W31SymmetricAerated: return "w31-sym";
    case DensityKind::R3Third: return "r3third";
    case DensityKind::Patalan: return "patalan";
  }
  return "?";
}

bool has_param(DensityKind k) {
  return k == DensityKind::MarchenkoPastur || k == DensityKind::R3Third || k == DensityKind::Patalan;
}

// W_{3,1}(X) with y = sqrt(1 - 4X/27) supplied by the caller, who can form it
// without cancellation near X = 27/4.
double w31(double X, double y) {
  const double num = 3.0 * std::cbrt((1 + y) * (1 + y)) - std::cbrt(4.0 * X);
  const double den = std::cbrt(16.0) * std::sqrt(3.0) * pi * std::cbrt(X * X) * std::cbrt(1 + y);
  return num / den;
}

// Density on segment `seg`, given the distances xl = x - lo and xu = hi - x.
double density_at(const DensitySpec& spec, std::size_t seg, double xl, double xu) {
  const double p = spec.param.to_double();
  switch (spec.kind) {
    case DensityKind::Catalan:
      return std::sqrt(xu / xl) / (2 * pi);
    case DensityKind::MarchenkoPastur: {
      const double lo = (1 - std::sqrt(p)) * (1 - std::sqrt(p));
      return std::sqrt(xl * xu) / (2 * pi * (lo + xl));
    }
    case DensityKind::W31:
      return w31(xl, std::sqrt(4.0 * xu / 27.0));
    case DensityKind::W31SymmetricAerated: {
      const double s = std::sqrt(27.0) / 2;
      // |x| and s - |x| on either side of the origin.
      const double ax = seg == 0 ? xu : xl;
      const double gap = seg == 0 ? xl : xu;
      return w31(ax * ax, std::sqrt(4.0 * gap * (s + ax) / 27.0)) * ax;
    }
    case DensityKind::R3Third:
      return std::sqrt(3.0) * std::cbrt(xu) / (2 * p * pi * std::cbrt(xl));
    case DensityKind::Patalan:
      return std::pow(xu, 1 / p) * std::sin(pi / p) / (p * pi * std::pow(xl, 1 / p));
  }
  return 0.0;
}

long substitution_power(const Rational& alpha) {
  if (alpha.is_integer()) return 1;
  return alpha.denominator().get_si();
}

}  // namespace

DensitySpec DensitySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  DensitySpec spec;
  bool found = false;
  for (DensityKind k : {DensityKind::Catalan, DensityKind::MarchenkoPastur, DensityKind::W31,
                        DensityKind::W31SymmetricAerated, DensityKind::R3Third, DensityKind::Patalan}) {
    if (kind_name(k) == name) {
      spec.kind = k;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown density '" + std::string(name) + "'");
  if (has_param(spec.kind)) {
    if (colon == std::string_view::npos) throw ParseError("density '" + std::string(name) + "' needs a parameter");
    spec.param = Rational::parse(text.substr(colon + 1));
  } else if (colon != std::string_view::npos) {
    throw ParseError("density '" + std::string(name) + "' takes no parameter");
  }
  segments(spec);  // validates the parameter
  return spec;
}

std::string DensitySpec::to_string() const {
  return has_param(kind) ? kind_name(kind) + ":" + param.to_string() : kind_name(kind);
}

std::vector<Segment> segments(const DensitySpec& spec) {
  const Rational half(1, 2);
  const double p = spec.param.to_double();
  switch (spec.kind) {
    case DensityKind::Catalan:
      return {{0.0, 4.0, -half, half}};
    case DensityKind::MarchenkoPastur: {
      if (spec.param.sign() <= 0) throw DomainError("Marchenko-Pastur needs t > 0");
      const double r = std::sqrt(p);
      const bool hard_edge = spec.param == Rational(1);
      return {{(1 - r) * (1 - r), (1 + r) * (1 + r), hard_edge ? -half : half, half}};
    }
    case DensityKind::W31:
      return {{0.0, 27.0 / 4, Rational(-2, 3), half}};
    case DensityKind::W31SymmetricAerated: {
      const double s = std::sqrt(27.0) / 2;
      return {{-s, 0.0, half, Rational(-1, 3)}, {0.0, s, Rational(-1, 3), half}};
    }
    case DensityKind::R3Third:
      if (spec.param.sign() <= 0) throw DomainError("the r3third density needs a > 0");
      return {{0.0, 3 * p, Rational(-1, 3), Rational(1, 3)}};
    case DensityKind::Patalan: {
      if (spec.param.abs() <= Rational(1)) throw DomainError("the Patalan density needs |p| > 1");
      const Rational inv = spec.param.inverse();
      return {{0.0, p * p, -inv, inv}};
    }
  }
  return {};
}

double atom_weight(const DensitySpec& spec) {
  if (spec.kind != DensityKind::MarchenkoPastur) return 0.0;
  return std::max(1.0 - spec.param.to_double(), 0.0);
}

double density_eval(const DensitySpec& spec, double x) {
  const auto segs = segments(spec);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (x > segs[i].lo && x < segs[i].hi) return density_at(spec, i, x - segs[i].lo, segs[i].hi - x);
  }
  throw DomainError("x lies outside the open support of " + spec.to_string());
}

QuadratureResult moment_by_quadrature(const DensitySpec& spec, unsigned n, double reltol) {
  const auto segs = segments(spec);
  QuadratureResult total;
  QuadratureOptions opts;
  opts.reltol = reltol;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    const double width = s.hi - s.lo;
    const double h = width / 2;
    // Left half: x = lo + h u^k; right half: x = hi - h u^k; u in (0, 1).
    for (int side = 0; side < 2; ++side) {
      const long k = substitution_power(side == 0 ? s.alpha_lo : s.alpha_hi);
      auto f = [&, side, k](double u) {
        const double uk1 = k == 1 ? 1.0 : std::pow(u, static_cast<double>(k - 1));
        const double near = h * uk1 * u;
        const double far = width - near;
        const double xl = side == 0 ? near : far;
        const double xu = side == 0 ? far : near;
        const double x = side == 0 ? s.lo + xl : s.hi - xu;
        return std::pow(x, static_cast<double>(n)) * density_at(spec, i, xl, xu) * h * static_cast<double>(k) * uk1;
      };
      const QuadratureResult part = integrate_gk15(f, 0.0, 1.0, opts);
      total.value += part.value;
      total.error_estimate += part.error_estimate;
      total.evaluations += part.evaluations;
    }
  }
  if (n == 0) total.value += atom_weight(spec);
  return total;
}

// ---------------------------------------------------------------------------

double safe_radius_r3(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("closed form needs b != 0");
  const positivity::CriticalPairR3 z = positivity::z_pm(a, b);
  double m = HUGE_VAL;
  for (const Surd& s : {z.minus, z.plus}) {
    const double r = std::abs(s.to_complex());
    if (r > 0) m = std::min(m, r);
  }
  return m / 2;
}

Complex d_closed_r3(const Rational& a, const Rational& b, Complex z) {
  if (b.is_zero()) throw DomainError("closed form needs b != 0");
  if (a.sign() < 0) return -d_closed_r3(-a, b, -z);
  if (std::abs(z) > safe_radius_r3(a, b)) throw DomainError("z lies outside the safe disc of the closed form");

  const double ad = a.to_double();
  const Rational d = a * a + Rational(3) * b;
  if (d.is_zero()) return (1.0 - std::pow(1.0 - 3.0 * ad * z, 1.0 / 3)) / ad;

  const double bd = b.to_double();
  const double m = std::abs(d.to_double());
  const Complex g = (27 * bd * bd * z + (Rational(2) * a.pow(3) + Rational(9) * a * b).to_double()) / std::pow(m, 1.5);
  Complex phi;
  if (d.sign() < 0)
    phi = -2.0 * std::sinh(std::asinh(g / 2.0) / 3.0);
  else if (b.sign() < 0)
    phi = 2.0 * std::cosh(std::acosh(-g / 2.0) / 3.0);
  else
    phi = 2.0 * std::sin(std::asin(g / 2.0) / 3.0);
  return (phi * std::sqrt(m) - ad) / (3 * bd);
}

Complex c_closed_r3(const Rational& a, const Rational& b, Complex z) {
  if (z == Complex(0.0)) return 1.0;
  return d_closed_r3(a, b, z) / z;
}

namespace {

positivity::ExactNSetR4 require_special(const Rational& a, const Rational& b, const Rational& e) {
  const auto n = positivity::special_r4(a, b, e);
  if (!n) throw DomainError("closed form needs b^3 = 4abe + 8e^2 with b, e != 0");
  return *n;
}

}  // namespace

double safe_radius_r4_special(const Rational& a, const Rational& b, const Rational& e) {
  const positivity::ExactNSetR4 n = require_special(a, b, e);
  double m = HUGE_VAL;
  for (const Rational& v : {n.first, n.second})
    if (!v.is_zero()) m = std::min(m, std::abs(v.to_double()));
  return m / 2;
}

Complex d_closed_r4_special(const Rational& a, const Rational& b, const Rational& e, Complex z) {
  require_special(a, b, e);
  const double bd = b.to_double();
  const double ed = e.to_double();
  const double sgn = e.sign();
  const Complex inner = std::sqrt(ed * ed - bd * bd * ed * z);
  const Complex outer = std::sqrt(std::pow(bd, 4) + 16 * bd * ed * ed - sgn * 16 * bd * ed * inner);
  return (-bd * bd + outer) / (4 * bd * ed);
}

Complex c_closed_r4_special(const Rational& a, const Rational& b, const Rational& e, Complex z) {
  if (z == Complex(0.0)) return 1.0;
  return d_closed_r4_special(a, b, e, z) / z;
}

double eq38_residual(const Rational& a, const Rational& b, const Rational& e, Complex w, Complex z) {
  require_special(a, b, e);
  const double ad = a.to_double(), bd = b.to_double(), ed = e.to_double();
  const Complex lhs = w - ad * w * w - bd * w * w * w - ed * w * w * w * w - z;
  const Complex s = std::sqrt(ed * ed - bd * bd * ed * z);
  const Complex common = w * w + bd * w / (2 * ed) - 1 / bd;
  const Complex rhs = -ed * (common - s / (bd * ed)) * (common + s / (bd * ed));
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

Complex series_eval(std::span<const Rational> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

}  // namespace gencat::analytic
