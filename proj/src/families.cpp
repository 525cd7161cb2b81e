#include "gencat/families.hpp"

#include "gencat/errors.hpp"

namespace gencat {

Rational fuss_raney(const Rational& p, const Rational& r, long n) {
  if (n < 0) throw DomainError("Raney number index must be >= 0");
  const Rational top = Rational(n) * p + r;
  if (top.is_zero()) throw DomainError("Raney number undefined when np + r = 0");
  return binomial(top, n) * r / top;
}

ParamVec fuss_param_vec(int p) {
  if (p < 2) throw DomainError("Fuss parameter vector needs p >= 2");
  std::vector<Rational> v;
  for (int k = 2; k <= p; ++k) {
    const Rational c(binomial(p - 1, k - 1));
    v.push_back(k % 2 == 0 ? c : -c);
  }
  return ParamVec(std::move(v));
}

ParamVec patalan_param_vec(int p) {
  if (p < 2) throw DomainError("Patalan parameter vector needs an integer p >= 2");
  const Rational pr(p);
  std::vector<Rational> v;
  for (int k = 2; k <= p; ++k) v.push_back((-pr).pow(k) / (pr * pr) * Rational(binomial(p, k)));
  return ParamVec(std::move(v));
}

MomentTable patalan_moments(const Rational& p, std::size_t n_max) {
  if (p.is_zero()) throw DomainError("Patalan numbers need p != 0");
  MomentTable out;
  out.source = MomentSource::FamilyFormula;
  const Rational inv = p.inverse();
  for (std::size_t n = 0; n <= n_max; ++n) {
    const long ln = static_cast<long>(n);
    out.terms.push_back(-p.pow(2 * ln + 1) * binomial(Rational(ln) - inv, ln + 1));
  }
  return out;
}

ParamVec mono_power_param_vec(int k) {
  if (k < 1) throw DomainError("monotonic power needs k >= 1");
  const Poly p1 = ParamVec({Rational(1)}).poly();
  Poly acc = p1;
  for (int i = 1; i < k; ++i) acc = p1.compose(acc);
  return ParamVec::from_poly(acc);
}

}  // namespace gencat
