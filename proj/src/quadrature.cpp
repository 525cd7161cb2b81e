#include "gencat/quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "gencat/errors.hpp"

namespace gencat {

namespace {

// Kronrod abscissae (descending) and weights; every other node is a Gauss node.
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error, abs_value;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = fc * wgk[7];
  double gauss = fc * wg[3];
  double absk = std::abs(kron);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += wgk[j] * (f1 + f2);
    absk += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  return {lo, hi, kron * h, std::abs((kron - gauss) * h), absk * std::abs(h)};
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                const QuadratureOptions& options) {
  std::priority_queue<Panel> heap;
  Panel first = gk15(f, lo, hi);
  double value = first.value;
  double error = first.error;
  double absval = first.abs_value;
  std::size_t evals = 15;
  heap.push(first);

  auto target = [&] { return std::max(options.abstol, options.reltol * absval); };
  while (error > target()) {
    if (heap.size() >= options.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature did not converge: error estimate " << error << " exceeds " << target();
      throw NumericFailure(msg.str());
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // No representable midpoint left.
      std::ostringstream msg;
      msg << "quadrature panel collapsed at x = " << mid << " with error estimate " << error;
      throw NumericFailure(msg.str());
    }
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    evals += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    absval += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double v = 0.0, e = 0.0;
  for (; !heap.empty(); heap.pop()) {
    v += heap.top().value;
    e += heap.top().error;
  }
  return {v, e, evals};
}

}  // namespace gencat
