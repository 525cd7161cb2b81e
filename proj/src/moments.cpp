#include "gencat/moments.hpp"

#include <cmath>

#include "gencat/errors.hpp"
#include "gencat/series.hpp"

namespace gencat {

std::string to_string(MomentSource source) {
  switch (source) {
    case MomentSource::Recurrence: return "recurrence";
    case MomentSource::Reversion: return "reversion";
    case MomentSource::ClosedFormR3: return "closed-form-r3";
    case MomentSource::FreePower: return "free-power";
    case MomentSource::FromCumulants: return "from-cumulants";
    case MomentSource::FamilyFormula: return "family-formula";
  }
  return "unknown";
}

MomentTable moments_recurrence(const ParamVec& a, std::size_t n_max) {
  const std::size_t r = a.r();
  std::vector<Rational> c(n_max + 1);
  c[0] = Rational(1);
  // powers[j][m] = [z^m] C(z)^j over the known prefix, j = 1..r.
  std::vector<std::vector<Rational>> powers(r + 1, std::vector<Rational>(n_max + 1));
  for (std::size_t j = 1; j <= r; ++j) powers[j][0] = Rational(1);

  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t j = 2; j <= r && j <= n + 1; ++j) {
      const Rational aj = a.a(j);
      if (aj.is_zero()) continue;
      acc += aj * powers[j][n + 1 - j];
    }
    c[n] = acc;
    powers[1][n] = c[n];
    for (std::size_t j = 2; j <= r; ++j) {
      Rational s;
      for (std::size_t i = 0; i <= n; ++i) s += powers[j - 1][i] * c[n - i];
      powers[j][n] = s;
    }
  }
  return {std::move(c), MomentSource::Recurrence, std::nullopt};
}

MomentTable moments_via_reversion(const ParamVec& a, std::size_t n_max) {
  const TruncatedSeries p = TruncatedSeries::from_poly(a.poly(), n_max + 1);
  const TruncatedSeries d = series_reversion(p);
  std::vector<Rational> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) c[n] = d[n + 1];
  return {std::move(c), MomentSource::Reversion, std::nullopt};
}

MomentTable moments_r3(const Rational& a, const Rational& b, std::size_t n_max) {
  std::vector<Rational> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const long ln = static_cast<long>(n);
    Rational acc;
    for (long j = 0; 2 * j <= ln; ++j) {
      const BigInt coeff = binomial(2 * ln - j, ln) * binomial(ln - j, j);
      acc += Rational(coeff) * a.pow(ln - 2 * j) * b.pow(j);
    }
    c[n] = acc / Rational(ln + 1);
  }
  return {std::move(c), MomentSource::ClosedFormR3, std::nullopt};
}

ParamVec dilate(const ParamVec& a, const Rational& d) {
  if (d.is_zero()) throw DomainError("dilation factor must be nonzero");
  std::vector<Rational> v(a.coeffs().begin(), a.coeffs().end());
  Rational factor = d;
  for (auto& x : v) {
    x *= factor;
    factor *= d;
  }
  return ParamVec(std::move(v));
}

CumulantTable cumulants(const ParamVec& a, std::size_t n_max) {
  // h_0 = 1, h_n = sum_{j=1}^{min(n, r-1)} a_{j+1} h_{n-j}; kappa_n = h_n.
  const std::size_t r = a.r();
  std::vector<Rational> h(n_max + 1);
  h[0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n && j + 1 <= r; ++j) acc += a.a(j + 1) * h[n - j];
    h[n] = acc;
  }
  return {std::vector<Rational>(h.begin() + 1, h.end())};
}

MomentTable moments_from_cumulants(const CumulantTable& k, std::size_t n_max) {
  if (n_max > k.size()) throw DomainError("not enough cumulants for the requested moments");
  // c_n = sum_{j=1}^{n} kappa_j [z^{n-j}] C^j; powers[j][m] = [z^m] C^j.
  std::vector<Rational> c(n_max + 1);
  c[0] = Rational(1);
  std::vector<std::vector<Rational>> powers(n_max + 1, std::vector<Rational>(n_max + 1));
  for (std::size_t j = 1; j <= n_max; ++j) powers[j][0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational& kj = k.kappa(j);
      if (kj.is_zero()) continue;
      acc += kj * powers[j][n - j];
    }
    c[n] = acc;
    powers[1][n] = c[n];
    for (std::size_t j = 2; j <= n_max; ++j) {
      Rational s;
      for (std::size_t i = 0; i <= n; ++i) s += powers[j - 1][i] * c[n - i];
      powers[j][n] = s;
    }
  }
  return {std::move(c), MomentSource::FromCumulants, std::nullopt};
}

MomentTable free_power_moments(const ParamVec& a, const Rational& t, std::size_t n_max, FreePowerRoute route) {
  if (t.sign() <= 0) throw DomainError("free convolution power needs t > 0");
  MomentTable out;
  if (route == FreePowerRoute::Cumulants) {
    CumulantTable k = cumulants(a, n_max);
    for (auto& x : k.terms) x *= t;
    out = moments_from_cumulants(k, n_max);
  } else {
    const std::size_t order = n_max + 1;
    const TruncatedSeries numerator = TruncatedSeries::from_poly(a.poly(), order);
    std::vector<Rational> den(order + 1);
    den[0] = Rational(1);
    for (std::size_t j = 2; j <= a.r() && j - 1 <= order; ++j) den[j - 1] = (t - Rational(1)) * a.a(j);
    const TruncatedSeries z_of_w = numerator / TruncatedSeries(std::move(den));
    const TruncatedSeries d = series_reversion(z_of_w);
    out.terms.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.terms[n] = d[n + 1];
  }
  out.source = MomentSource::FreePower;
  out.free_power = t;
  return out;
}

Rational kappa_r3(const Rational& a, const Rational& b, std::size_t n) {
  const long ln = static_cast<long>(n);
  Rational acc;
  for (long k = 0; 2 * k <= ln; ++k) acc += Rational(binomial(ln - k, k)) * a.pow(ln - 2 * k) * b.pow(k);
  return acc;
}

BinetTerms cumulants_r3_binet(const Rational& a, const Rational& b, std::size_t n) {
  const Rational disc = a * a + Rational(4) * b;
  if (disc.sign() <= 0) throw DomainError("Binet form needs a^2 + 4b > 0");
  if (b.is_zero()) throw DomainError("Binet form needs b != 0");
  const Surd root = Surd::sqrt_of(disc);
  const Surd two_root = Surd(Rational(2)) * root;

  BinetTerms out;
  out.t_minus = (root - Surd(a)) / two_root;
  out.t_plus = (root + Surd(a)) / two_root;
  out.u_minus = Surd(Rational(-2) * b) / (root + Surd(a));
  out.u_plus = Surd(Rational(2) * b) / (root - Surd(a));

  Surd pm(Rational(1));
  Surd pp(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    pm = pm * out.u_minus;
    pp = pp * out.u_plus;
  }
  out.kappa = out.t_minus * pm + out.t_plus * pp;

  const double ad = a.to_double();
  const double bd = b.to_double();
  const double rd = std::sqrt(disc.to_double());
  const double tm = (rd - ad) / (2.0 * rd);
  const double tp = (rd + ad) / (2.0 * rd);
  const double um = -2.0 * bd / (rd + ad);
  const double up = 2.0 * bd / (rd - ad);
  const auto e = static_cast<double>(n);
  out.kappa_double = tm * std::pow(um, e) + tp * std::pow(up, e);
  return out;
}

}  // namespace gencat
