#include "gencat/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gencat/errors.hpp"

namespace gencat::positivity {

std::vector<ComplexValue> CriticalValueSet::distinct_values(double merge_tol) const {
  std::vector<ComplexValue> out;
  for (const auto& p : pairs) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ComplexValue& z) {
      return std::abs(z - p.z0) <= merge_tol * std::max(1.0, std::abs(z));
    });
    if (!seen) out.push_back(p.z0);
  }
  return out;
}

namespace {

// Exact evaluation at a double-valued point. Expanded compositions have large
// coefficients and cancel badly in floating point; at a critical point the
// value is insensitive to small errors in w, so exact evaluation is enough.
struct ExactComplex {
  mpq_class re, im;
};

ExactComplex eval_exact(const Poly& p, const ExactComplex& w) {
  ExactComplex acc;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    mpq_class re = acc.re * w.re - acc.im * w.im + c[i].raw();
    acc.im = acc.re * w.im + acc.im * w.re;
    acc.re = std::move(re);
  }
  return acc;
}

ComplexValue to_complex(const ExactComplex& z) { return {z.re.get_d(), z.im.get_d()}; }
ExactComplex to_exact(ComplexValue w) { return {mpq_class(w.real()), mpq_class(w.imag())}; }

// A few Newton steps on p' with exactly evaluated p' and p''.
ComplexValue polish(const Poly& dp, const Poly& ddp, ComplexValue w) {
  for (int i = 0; i < 3; ++i) {
    const ExactComplex x = to_exact(w);
    const ComplexValue f = to_complex(eval_exact(dp, x));
    const ComplexValue df = to_complex(eval_exact(ddp, x));
    if (df == ComplexValue(0.0, 0.0)) break;
    const ComplexValue step = f / df;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    const ComplexValue next = w - step;
    if (relative_residual(dp, next) > relative_residual(dp, w) * 4 + 1e-300) break;
    if (next == w) break;
    w = next;
  }
  return w;
}

}  // namespace

CriticalValueSet critical_values(const ParamVec& a, double tol) {
  const Poly p = a.poly();
  const Poly dp = p.derivative();
  const Poly ddp = dp.derivative();
  CriticalValueSet out;
  out.tol = tol;
  RootFinderOptions opts;
  opts.tol = tol;
  for (ComplexValue w : roots_complex(dp, opts)) {
    w = polish(dp, ddp, w);
    out.pairs.push_back({w, to_complex(eval_exact(p, to_exact(w))), relative_residual(dp, w)});
  }
  return out;
}

bool nset_real(const ParamVec& a, double tol) {
  const CriticalValueSet set = critical_values(a);
  return std::all_of(set.pairs.begin(), set.pairs.end(), [tol](const CriticalPair& p) {
    return std::abs(p.z0.imag()) <= tol * std::max(1.0, std::abs(p.z0));
  });
}

bool derivative_real_rooted(const ParamVec& a) { return sturm_real_root_count(a.poly().derivative()).all_real(); }

bool criterion_r3(const Rational& a, const Rational& b) { return (a * a + Rational(3) * b).sign() >= 0; }

CriticalPairR3 z_pm(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("z_pm needs b != 0");
  if ((a * a + Rational(4) * b).is_zero()) return {Surd(Rational(0)), Surd(Rational(8) / (Rational(27) * a))};
  const Rational d = a * a + Rational(3) * b;
  const Rational den = Rational(27) * b * b;
  const Rational x = (Rational(-2) * a.pow(3) - Rational(9) * a * b) / den;
  const Rational y = Rational(2) * d / den;
  return {Surd(x, -y, d), Surd(x, y, d)};
}

TauPair tau_pm(const Rational& a, const Rational& b) {
  const CriticalPairR3 z = z_pm(a, b);
  auto inv = [](const Surd& s) -> std::optional<Surd> {
    if (s.is_rational() && s.rational_part().is_zero()) return std::nullopt;
    return s.inverse();
  };
  return {inv(z.minus), inv(z.plus)};
}

SupportBounds support_bounds(const Rational& a, const Rational& b) {
  if (a.sign() <= 0) throw DomainError("support bounds are exposed for a > 0 only");
  if (b.is_zero()) throw DomainError("support bounds need b != 0");
  if (!criterion_r3(a, b)) throw DomainError("a^2 + 3b < 0: the sequence is not positive definite");
  const TauPair t = tau_pm(a, b);
  // a > 0 keeps z_+ > 0, so tau_+ is finite.
  if (b.sign() < 0) return {Surd(Rational(0)), *t.plus};
  return {*t.minus, *t.plus};
}

Rational necessary_r4_value(const Rational& a, const Rational& b, const Rational& e) {
  const Rational a2 = a * a;
  return a2.pow(3) + Rational(3) * a2 * a2 * b + Rational(3) * a2 * b * b + Rational(2) * b.pow(3) -
         Rational(2) * a * b * e - e * e;
}

bool necessary_r4(const Rational& a, const Rational& b, const Rational& e) {
  return necessary_r4_value(a, b, e).sign() >= 0;
}

Rational sufficient_r4_value(const Rational& a, const Rational& b, const Rational& e) {
  return Rational(9) * a * a * b * b + Rational(27) * b.pow(3) - Rational(32) * a.pow(3) * e -
         Rational(108) * a * b * e - Rational(108) * e * e;
}

bool sufficient_r4(const Rational& a, const Rational& b, const Rational& e) {
  return sufficient_r4_value(a, b, e).sign() >= 0;
}

std::optional<ExactNSetR4> special_r4(const Rational& a, const Rational& b, const Rational& e) {
  if (b.is_zero() || e.is_zero()) return std::nullopt;
  if (b.pow(3) != Rational(4) * a * b * e + Rational(8) * e * e) return std::nullopt;
  return ExactNSetR4{(-b.pow(4) - Rational(32) * b * e * e) / (Rational(256) * e.pow(3)), e / (b * b)};
}

bool sufficient_r5_sym(const Rational& a, const Rational& b) {
  return a.sign() > 0 && b.sign() < 0 && (Rational(9) * a * a + Rational(20) * b).sign() >= 0;
}

Rational eq41_value(const Rational& a, const Rational& b, const Rational& e) {
  return Rational(225) * a * a * b * b + Rational(500) * b.pow(3) - Rational(756) * a.pow(3) * e -
         Rational(1890) * a * b * e - Rational(1323) * e * e;
}

Rational eq42_value(const Rational& a, const Rational& b, const Rational& e) {
  const Rational lhs = Rational(25) * b * b - Rational(63) * a * e;
  const Rational rhs = Rational(945) * a * b * e - Rational(250) * b.pow(3) + Rational(1323) * e * e;
  return Rational(4) * lhs.pow(3) - rhs * rhs;
}

bool sufficient_r7_sym(const Rational& a, const Rational& b, const Rational& e) {
  return a.sign() >= 0 && b.sign() <= 0 && e.sign() > 0 && eq41_value(a, b, e).sign() >= 0;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");

  // Clear denominators row by row, then run Bareiss over the integers where
  // every division is exact.
  std::vector<std::vector<BigInt>> x(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) x[i][j] = m[i][j].numerator() * (l / m[i][j].denominator());
    scale *= l;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (x[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && x[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(x[k], x[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = x[i][j] * x[k][k] - x[i][k] * x[k][j];
        mpz_divexact(x[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      x[i][k] = 0;
    }
    prev = x[k][k];
  }
  BigInt det = x[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

namespace {

Rational hankel_det(std::span<const Rational> c, std::size_t k) {
  std::vector<std::vector<Rational>> h(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h[i][j] = c[i + j];
  return determinant(std::move(h));
}

}  // namespace

std::vector<Rational> hankel_dets(std::span<const Rational> c, std::size_t m) {
  if (m == 0) return {};
  if (2 * m - 2 >= c.size()) throw DomainError("not enough moments for the requested Hankel order");
  std::vector<Rational> out;
  out.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) out.push_back(hankel_det(c, k));
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::PositiveDefinite: return "PositiveDefinite";
    case Status::NotPositiveDefinite: return "NotPositiveDefinite";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string certificate_name(const Certificate& c) {
  struct Namer {
    std::string operator()(std::monostate) const { return "None"; }
    std::string operator()(const IffCriterionR3&) const { return "IffCriterionR3"; }
    std::string operator()(const R3CriterionViolated&) const { return "R3CriterionViolated"; }
    std::string operator()(const SturmAllRealRoots&) const { return "SturmAllRealRoots"; }
    std::string operator()(const SpecialSubclassR4&) const { return "SpecialSubclassR4"; }
    std::string operator()(const SymmetricR5&) const { return "SymmetricR5"; }
    std::string operator()(const SymmetricR7&) const { return "SymmetricR7"; }
    std::string operator()(const NecessaryR4Violated&) const { return "NecessaryR4Violated"; }
    std::string operator()(const HankelNegative&) const { return "HankelNegative"; }
    std::string operator()(const NumericNsetReal&) const { return "NumericNsetReal"; }
  };
  return std::visit(Namer{}, c);
}

Verdict verdict(const ParamVec& a, const VerdictOptions& options) {
  if (options.hankel_depth < 1) throw DomainError("hankel depth must be >= 1");
  const std::size_t r = a.r();
  Verdict v;
  v.hankel_depth = options.hankel_depth;
  auto positive = [&](Certificate c, bool rigorous = true) {
    v.status = Status::PositiveDefinite;
    v.certificate = std::move(c);
    v.rigorous = rigorous;
    return v;
  };
  auto negative = [&](Certificate c) {
    v.status = Status::NotPositiveDefinite;
    v.certificate = std::move(c);
    v.rigorous = true;
    return v;
  };

  // P' linear: every nonzero a_2 is a dilation of the Catalan case.
  if (r == 2) return positive(SturmAllRealRoots{1});
  if (r == 3) {
    const Rational d = a.a(2) * a.a(2) + Rational(3) * a.a(3);
    if (d.sign() >= 0) return positive(IffCriterionR3{d});
    return negative(R3CriterionViolated{d});
  }

  const RealRootCount count = sturm_real_root_count(a.poly().derivative());
  if (count.all_real()) return positive(SturmAllRealRoots{count.real_roots});
  if (r == 4) {
    if (auto n = special_r4(a.a(2), a.a(3), a.a(4))) return positive(SpecialSubclassR4{*n});
  }
  if (r == 5 && a.a(2).is_zero() && a.a(4).is_zero() && sufficient_r5_sym(a.a(3), a.a(5)))
    return positive(SymmetricR5{Rational(9) * a.a(3) * a.a(3) + Rational(20) * a.a(5)});
  if (r == 7 && a.a(2).is_zero() && a.a(4).is_zero() && a.a(6).is_zero() &&
      sufficient_r7_sym(a.a(3), a.a(5), a.a(7)))
    return positive(SymmetricR7{eq41_value(a.a(3), a.a(5), a.a(7))});

  if (r == 4) {
    const Rational n = necessary_r4_value(a.a(2), a.a(3), a.a(4));
    if (n.sign() < 0) return negative(NecessaryR4Violated{n});
  }
  const MomentTable c = moments_recurrence(a, 2 * options.hankel_depth - 2);
  for (std::size_t k = 1; k <= options.hankel_depth; ++k) {
    Rational h = hankel_det(c.terms, k);
    if (h.sign() < 0) return negative(HankelNegative{k, std::move(h)});
  }

  try {
    if (nset_real(a, options.tol)) return positive(NumericNsetReal{options.tol}, false);
  } catch (const NumericFailure&) {
    // fall through to Unknown
  }
  return v;
}

std::vector<GridPoint> region_grid(const Rational& e, const Rational& a_min, const Rational& a_max,
                                   const Rational& b_min, const Rational& b_max, const Rational& step) {
  if (step.sign() <= 0) throw DomainError("grid step must be positive");
  std::vector<GridPoint> out;
  for (Rational a = a_min; a <= a_max; a += step) {
    for (Rational b = b_min; b <= b_max; b += step) {
      GridPoint g{a, b};
      g.nec32 = necessary_r4(a, b, e);
      g.suf33 = sufficient_r4(a, b, e);
      g.special35 = b.pow(3) == Rational(4) * a * b * e + Rational(8) * e * e;
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string region_grid_csv(std::span<const GridPoint> grid) {
  std::ostringstream os;
  os << "a,b,nec32,suf33,special35\n";
  for (const auto& g : grid)
    os << g.a << ',' << g.b << ',' << int(g.nec32) << ',' << int(g.suf33) << ',' << int(g.special35) << '\n';
  return os.str();
}

}  // namespace gencat::positivity
