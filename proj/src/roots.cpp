#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gencat/roots.hpp"

namespace gencat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  ComplexValue value;
  ComplexValue derivative;
  double scale;  // sum |c_i| |z|^i
};

Evaluation evaluate(const std::vector<double>& c, ComplexValue z) {
  ComplexValue p{0.0, 0.0};
  ComplexValue dp{0.0, 0.0};
  double scale = 0.0;
  const double r = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    scale = scale * r + std::abs(c[i]);
  }
  return {p, dp, scale};
}

double residual_of(const Evaluation& e) {
  return e.scale > 0.0 ? std::abs(e.value) / e.scale : std::abs(e.value);
}

// Initial approximations: a slightly perturbed circle around the root
// centroid, with a radius that bounds the root moduli within a factor 2.
std::vector<ComplexValue> initial_points(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  const double lead = c[n];
  const double centre = -c[n - 1] / (static_cast<double>(n) * lead);
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double q = std::abs(c[n - k] / lead);
    if (q > 0.0) radius = std::max(radius, std::pow(q, 1.0 / static_cast<double>(k)));
  }
  if (radius == 0.0) radius = 1.0;
  radius += std::abs(centre);
  std::vector<ComplexValue> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    const double rho = radius * (k % 2 == 0 ? 1.0 : 0.93);
    z[k] = ComplexValue(centre, 0.0) + std::polar(rho, angle);
  }
  return z;
}

}  // namespace

double relative_residual(const Poly& p, ComplexValue z) { return residual_of(evaluate(p.to_doubles(), z)); }

std::vector<ComplexValue> roots_complex(const Poly& p, const RootFinderOptions& options) {
  if (p.degree() < 1) throw DomainError("roots_complex needs a polynomial of degree >= 1");
  if (!(options.tol > 0.0)) throw DomainError("roots_complex needs tol > 0");
  const std::vector<double> c = p.to_doubles();
  const std::size_t n = c.size() - 1;

  std::vector<ComplexValue> z;
  if (n == 1) {
    z.push_back(ComplexValue(-c[0] / c[1], 0.0));
  } else {
    z = initial_points(c);
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    for (int iter = 0; iter < options.max_iterations && remaining > 0; ++iter) {
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        const Evaluation e = evaluate(c, z[i]);
        if (std::abs(e.value) <= 4.0 * kEps * e.scale) {
          done[i] = true;
          --remaining;
          continue;
        }
        const ComplexValue ratio = e.value / e.derivative;
        ComplexValue repulsion{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        }
        const ComplexValue step = ratio / (1.0 - ratio * repulsion);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[i] -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) {
          done[i] = true;
          --remaining;
        }
      }
    }
  }

  std::vector<double> residuals(z.size());
  bool ok = true;
  for (std::size_t i = 0; i < z.size(); ++i) {
    residuals[i] = residual_of(evaluate(c, z[i]));
    if (!(residuals[i] <= options.tol)) ok = false;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "root finder did not converge in " << options.max_iterations << " iterations; residuals:";
    for (double r : residuals) msg << ' ' << r;
    throw RootFinderFailure(msg.str(), std::move(residuals));
  }
  std::sort(z.begin(), z.end(), [](const ComplexValue& a, const ComplexValue& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace gencat
