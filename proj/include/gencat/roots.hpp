#pragma once

#include <complex>
#include <vector>

#include "gencat/errors.hpp"
#include "gencat/poly.hpp"

namespace gencat {

using ComplexValue = std::complex<double>;

struct RealRootCount {
  int real_roots = 0;      // distinct real roots
  int distinct_roots = 0;  // distinct complex roots (degree of the squarefree part)

  bool all_real() const { return real_roots == distinct_roots; }
};

/// Sturm sequence of p: p, p', then negated remainders. Exact over Q.
std::vector<Poly> sturm_sequence(const Poly& p);

/// Number of distinct real roots of p, counted with a Sturm sequence of its
/// squarefree part p / gcd(p, p'). Throws DomainError on the zero polynomial.
RealRootCount sturm_real_root_count(const Poly& p);

struct RootFinderOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

/// Thrown when the simultaneous iteration stalls; carries the best relative
/// residual |p(z)| / sum |c_i||z|^i reached for each approximation.
class RootFinderFailure : public NumericFailure {
 public:
  RootFinderFailure(const std::string& what, std::vector<double> residuals)
      : NumericFailure(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Relative residual |p(z)| / sum_i |c_i| |z|^i in double precision.
double relative_residual(const Poly& p, ComplexValue z);

/// All complex roots of p with multiplicity (Aberth-Ehrlich iteration in
/// double precision), sorted by real part and then imaginary part.
/// Every returned root satisfies relative_residual(p, root) <= tol.
std::vector<ComplexValue> roots_complex(const Poly& p, const RootFinderOptions& options = {});

}  // namespace gencat
