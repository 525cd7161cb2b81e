// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Usage: gencat_acceptance [--only N]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "gen.hpp"
#include "gencat/analytic.hpp"
#include "gencat/convolution.hpp"
#include "gencat/moments.hpp"
#include "gencat/oeis.hpp"
#include "gencat/oracle.hpp"
#include "gencat/positivity.hpp"
#include "oracles.hpp"

using namespace gencat;
using gencat::testing::Gen;

namespace {

// Pinned tolerances.
constexpr double kCriticalValueTol = 1e-12;   // 3
constexpr double kHausdorffTol = 1e-9;        // 4
constexpr double kBinetTol = 1e-12;           // 7
constexpr double kGfTol = 1e-10;              // 10
constexpr double kFactorizationTol = 1e-12;   // 10
constexpr double kQuadTol = 1e-7;             // 11
constexpr double kQuadTolAerated = 1e-6;      // 11

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failure message; returns cond so callers can chain.
  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      if (detail.tellp() > 0) detail << "; ";
      pass = false;
      detail << what;
    }
    return cond;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

Rational q(const char* s) { return Rational::parse(s); }
ParamVec pv(const char* s) { return ParamVec::parse(s); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> prefix(const oeis::SequenceFixture& f) {
  std::vector<Rational> out;
  for (const auto& t : f.terms) out.emplace_back(t);
  return out;
}

double rel(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// ---------------------------------------------------------------------------

void catalan_cli(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run({"gen", "--params", "1", "--n", "10"}, out, err);
  o.expect(code == 0, "exit code " + std::to_string(code));
  o.expect(out.str() == "[\"1\",\"1\",\"2\",\"5\",\"14\",\"42\",\"132\",\"429\",\"1430\",\"4862\",\"16796\"]\n",
           "output " + out.str());
}

void a063020(Outcome& o) {
  const ParamVec a = pv("1,1,-1");
  o.expect(moments_recurrence(a, 7).terms == ints({1, 1, 3, 9, 32, 119, 466, 1881}), "moment prefix");
  const auto v = positivity::verdict(a);
  o.expect(v.status == positivity::Status::PositiveDefinite, "status " + positivity::to_string(v.status));
  o.expect(std::holds_alternative<positivity::SturmAllRealRoots>(v.certificate),
           "certificate " + positivity::certificate_name(v.certificate));
}

void a121988(Outcome& o) {
  const ParamVec a = pv("2,-2,1");
  o.expect(moments_recurrence(a, 9).terms == prefix(oeis::load_fixture("A121988")), "moment prefix");
  const auto n = positivity::special_r4(q("2"), q("-2"), q("1"));
  if (!o.expect(n.has_value(), "special_r4 empty")) return;
  o.expect(n->first == q("3/16") && n->second == q("1/4"), "exact N-set " + n->first.to_string() + ", " + n->second.to_string());
  const auto numeric = positivity::critical_values(a).distinct_values();
  const std::vector<ComplexValue> want{3.0 / 16, 0.25};
  const double d = hausdorff_distance(numeric, want);
  o.detail << "critical value distance " << d;
  o.expect(d <= kCriticalValueTol, "exceeds tolerance");
}

void mono_example(Outcome& o) {
  const ParamVec c = mono_conv(pv("1"), pv("1,2"));
  o.expect(c == pv("2,0,-5,6,-2"), "convolution " + c.to_string());
  o.expect(moments_recurrence(c, 9).terms == prefix(oeis::load_fixture("mono-example")), "moment prefix");
  const auto rep = nset_composition_check(pv("1"), pv("1,2"), kHausdorffTol / 10);
  o.expect(rep.passed, "composition check");
  const double s7 = std::sqrt(7.0);
  const std::vector<ComplexValue> want{(-10 - 7 * s7) / 54, (-10 + 7 * s7) / 54, 5.0 / 32};
  const double d = hausdorff_distance(rep.lhs, want);
  o.detail << "hausdorff " << d;
  o.expect(d <= kHausdorffTol, "exceeds tolerance");
}

void triple_agreement(Outcome& o) {
  Gen g(5005);
  int r3 = 0;
  for (int i = 0; i < 200; ++i) {
    const ParamVec a = g.param_vec(6);
    const auto rec = moments_recurrence(a, 15);
    if (!o.expect(moments_via_reversion(a, 15).terms == rec.terms, "reversion differs at " + a.to_string())) return;
    if (a.r() == 3) {
      ++r3;
      if (!o.expect(moments_r3(a.a(2), a.a(3), 15).terms == rec.terms, "closed form differs at " + a.to_string())) return;
    }
  }
  o.detail << "200 vectors, " << r3 << " with r = 3";
}

void oracle_independence(Outcome& o) {
  Gen g(6006);
  for (int i = 0; i < 50; ++i) {
    const ParamVec a = g.param_vec(4);
    const auto c = moments_recurrence(a, 7);
    for (long n = 0; n <= 7; ++n)
      if (!o.expect(oracle::weighted_tree_sum(a, n) == c[static_cast<std::size_t>(n)],
                    "tree sum differs at " + a.to_string() + " n=" + std::to_string(n)))
        return;
  }
  for (int i = 0; i < 50; ++i) {
    const ParamVec a = g.integer_param_vec(4, 3);
    const auto c = moments_recurrence(a, 7);
    for (long n = 0; n <= 7; ++n)
      if (!o.expect(Rational(oracle::labeled_path_count(a, n)) == c[static_cast<std::size_t>(n)],
                    "path count differs at " + a.to_string() + " n=" + std::to_string(n)))
        return;
  }
  o.detail << "50 rational + 50 integer vectors";
}

void cumulant_suite(Outcome& o) {
  const auto k = cumulants(pv("2,-1"), 10);
  for (std::size_t n = 1; n <= 10; ++n) o.expect(k.kappa(n) == Rational(static_cast<long>(n + 1)), "kappa_" + std::to_string(n));

  Gen g(7007);
  for (int i = 0; i < 100; ++i) {
    const Rational a = g.rational(), b = g.nonzero_rational();
    const auto t = cumulants(ParamVec({a, b}), 20);
    o.expect(t.kappa(1) == a && t.kappa(2) == a * a + b, "initial terms");
    for (std::size_t n = 3; n <= 20; ++n)
      if (!o.expect(t.kappa(n) == a * t.kappa(n - 1) + b * t.kappa(n - 2), "recurrence at " + a.to_string() + "," + b.to_string()))
        return;
  }

  double worst = 0.0;
  int tried = 0;
  while (tried < 100) {
    const Rational a = g.rational(), b = g.nonzero_rational();
    if ((a * a + Rational(4) * b).sign() <= 0) continue;
    ++tried;
    const auto t = cumulants(ParamVec({a, b}), 20);
    for (std::size_t n = 1; n <= 20; ++n) {
      const BinetTerms bt = cumulants_r3_binet(a, b, n);
      if (!o.expect(bt.kappa == Surd(t.kappa(n)), "exact Binet differs at " + a.to_string() + "," + b.to_string())) return;
      const double exact = t.kappa(n).to_double();
      worst = std::max(worst, std::abs(bt.kappa_double - exact) / std::max(1.0, std::abs(exact)));
    }
  }
  o.detail << "Binet double error " << worst;
  o.expect(worst <= kBinetTol, "exceeds tolerance");
}

void criteria_equivalences(Outcome& o) {
  Gen g(8008);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = g.rational(), b = g.rational(), e = g.nonzero_rational();
    if (!o.expect(positivity::sufficient_r4(a, b, e) == positivity::derivative_real_rooted(ParamVec({a, b, e})),
                  "(33) vs Sturm at " + a.to_string() + "," + b.to_string() + "," + e.to_string()))
      return;
  }
  for (int i = 0; i < 1000; ++i) {
    const Rational a = g.rational(), b = g.rational(), e = g.nonzero_rational();
    if (!o.expect((positivity::eq41_value(a, b, e).sign() >= 0) == (positivity::eq42_value(a, b, e).sign() >= 0),
                  "(41) vs (42) at " + a.to_string() + "," + b.to_string() + "," + e.to_string()))
      return;
  }
  o.detail << "1000 + 1000 samples";
}

void refutations(Outcome& o) {
  using namespace positivity;
  const auto v = verdict(pv("-1,-1"));
  o.expect(v.status == Status::NotPositiveDefinite && std::holds_alternative<R3CriterionViolated>(v.certificate),
           "(-1,-1) verdict");
  const auto h = hankel_dets(moments_recurrence(pv("-1,-1"), 4).terms, 3);
  o.expect(h[2] == Rational(-1), "(-1,-1) H_3 = " + h[2].to_string());

  constexpr std::size_t depth = 12;
  nlohmann::ordered_json record = nlohmann::ordered_json::object();
  std::vector<std::string> unrefuted;
  for (const char* s : {"1,0,1", "1,0,-1", "0,1,1", "0,-1,-1", "1,1,1", "1,-1,1", "3,3,1", "2,1,2", "0,2,1", "-2,0,-1"}) {
    const auto dets = hankel_dets(moments_recurrence(pv(s), 2 * depth - 2).terms, depth);
    std::size_t order = 0;
    for (std::size_t k = 0; k < dets.size() && !order; ++k)
      if (dets[k].sign() < 0) order = k + 1;
    if (order) {
      record[s] = {{"order", order}, {"determinant", dets[order - 1].to_string()}};
    } else {
      record[s] = nullptr;
      unrefuted.push_back(std::string("(") + s + ")");
    }
  }
  std::ofstream("acceptance_refutation_orders.json") << record.dump(2) << '\n';
  for (const auto& [k, val] : record.items())
    if (!val.is_null()) o.detail << "(" << k << "):H" << val["order"].get<std::size_t>() << " ";
  for (const auto& s : unrefuted) o.expect(false, s + " not refuted by depth 12, flagged for review");
}

void closed_forms(Outcome& o) {
  using namespace analytic;
  Gen g(10010);
  double worst = 0.0;
  for (const auto& [as, bs] : std::vector<std::pair<const char*, const char*>>{{"1", "1"}, {"2", "-1"}, {"0", "1"}, {"1", "-1/3"}}) {
    const Rational a = q(as), b = q(bs);
    const auto c = moments_recurrence(ParamVec({a, b}), 24);
    const double radius = safe_radius_r3(a, b);
    for (int i = 0; i < 20; ++i) {
      const Complex z = std::polar(radius / 2 * g.real(0.0, 1.0), g.real(-std::numbers::pi, std::numbers::pi));
      worst = std::max(worst, rel(c_closed_r3(a, b, z), series_eval(c.terms, z)));
    }
  }
  const Rational a = q("2"), b = q("-2"), e = q("1");
  const auto c = moments_recurrence(pv("2,-2,1"), 24);
  const double radius = safe_radius_r4_special(a, b, e);
  double worst_fact = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex z = std::polar(radius / 2 * g.real(0.0, 1.0), g.real(-std::numbers::pi, std::numbers::pi));
    worst = std::max(worst, rel(c_closed_r4_special(a, b, e, z), series_eval(c.terms, z)));
    const Complex w(g.real(-2, 2), g.real(-2, 2));
    worst_fact = std::max(worst_fact, eq38_residual(a, b, e, w, z));
  }
  o.detail << "series error " << worst << ", factorization residual " << worst_fact;
  o.expect(worst <= kGfTol, "series tolerance exceeded");
  o.expect(worst_fact <= kFactorizationTol, "factorization tolerance exceeded");
}

void quadrature(Outcome& o) {
  using namespace analytic;
  double worst = 0.0;
  auto check = [&](const char* spec, unsigned n_max, double tol, const std::function<Rational(unsigned)>& exact) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const double want = exact(n).to_double();
      const double got = moment_by_quadrature(DensitySpec::parse(spec), n, tol / 100).value;
      // odd moments of the symmetric density vanish; compare those absolutely
      const double err = want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
      worst = std::max(worst, err);
      o.expect(err <= tol, std::string(spec) + " n=" + std::to_string(n));
    }
  };
  check("catalan", 10, kQuadTol, [](unsigned n) { return moments_recurrence(pv("1"), n)[n]; });
  check("r3third:1", 8, kQuadTol, [](unsigned n) { return moments_r3(q("1"), q("-1/3"), n)[n]; });
  for (const char* p : {"2", "-2", "3", "-3"}) {
    const std::string spec = std::string("patalan:") + p;
    check(spec.c_str(), 6, kQuadTol, [p](unsigned n) {
      // (1 - (1 - p^2 z)^{1/p}) / (p z)
      const Rational pp = q(p);
      return -binomial(pp.inverse(), n + 1) * (-pp * pp).pow(n + 1) / pp;
    });
  }
  check("w31-sym", 6, kQuadTolAerated, [](unsigned n) { return moments_recurrence(pv("0,1"), n)[n]; });
  o.detail << "worst error " << worst;
}

void free_powers(Outcome& o) {
  for (const char* t : {"2", "3"}) {
    for (auto route : {FreePowerRoute::Reversion, FreePowerRoute::Cumulants}) {
      const auto m = free_power_moments(pv("1"), q(t), 10, route);
      for (std::size_t n = 0; n <= 10; ++n)
        o.expect(m[n] == gencat::testing::narayana(n, q(t)), std::string("Narayana t=") + t + " n=" + std::to_string(n));
    }
  }
  const auto f = oeis::read_cache("A027307", GENCAT_OEIS_CACHE_DIR);
  if (!o.expect(f.has_value(), "A027307 cache fixture missing")) return;
  const auto m = free_power_moments(pv("0,1"), Rational(2), 2 * (f->terms.size() - 1));
  std::vector<Rational> even;
  for (std::size_t n = 0; n < m.size(); n += 2) even.push_back(m[n]);
  const auto rep = oeis::compare(even, *f);
  o.detail << "A027307 match=" << rep.match << " overlap=" << rep.overlap << " provenance=" << oeis::to_string(f->provenance);
  o.expect(rep.match, "A027307 mismatch");
  o.expect(f->provenance == oeis::Provenance::OeisFetched, "fixture provenance is not oeis-fetched");
}

void region(Outcome& o) {
  using namespace positivity;
  const auto grid = region_grid(q("1"), q("-10"), q("10"), q("-20"), q("8"), q("1/2"));
  std::ifstream in(GENCAT_FIXTURE_DIR "/region_grid_e1.csv");
  std::stringstream frozen;
  frozen << in.rdbuf();
  o.expect(in.good() || in.eof(), "fixture unreadable");
  o.expect(region_grid_csv(grid) == frozen.str(), "grid differs from the frozen fixture");

  int on_curve = 0, nec = 0, suf = 0;
  for (const auto& p : grid) {
    const bool curve = p.b.pow(3) == Rational(4) * p.a * p.b + Rational(8);
    o.expect(p.special35 == curve, "special35 at " + p.a.to_string() + "," + p.b.to_string());
    on_curve += curve;
    nec += p.nec32;
    suf += p.suf33;
    // sufficient region and the special curve both sit inside the necessary region
    o.expect(!p.suf33 || p.nec32, "suf33 outside nec32 at " + p.a.to_string() + "," + p.b.to_string());
    o.expect(!p.special35 || p.nec32, "special35 outside nec32 at " + p.a.to_string() + "," + p.b.to_string());
    if (p.a.is_zero() && p.b.is_zero()) o.expect(!p.nec32, "nec32 true at (0,0)");
    if (p.a == Rational(1) && p.b == Rational(1)) o.expect(!p.suf33, "suf33 true at (1,1)");
  }
  o.expect(on_curve > 0, "no grid point on the special curve");
  o.detail << grid.size() << " points, nec32=" << nec << " suf33=" << suf << " special35=" << on_curve;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: gencat_acceptance [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "catalan fixture via the gen verb", 1, catalan_cli},
      {2, "A063020 prefix and Sturm verdict", 1, a063020},
      {3, "A121988 prefix and exact N-set", 1, a121988},
      {4, "monotonic convolution example", 1, mono_example},
      {5, "recurrence = reversion = r3 closed form", 30, triple_agreement},
      {6, "tree and path oracles", 60, oracle_independence},
      {7, "cumulants: values, recurrence, Binet", 10, cumulant_suite},
      {8, "(33) vs Sturm, (41) vs (42)", 30, criteria_equivalences},
      {9, "refutations by Hankel determinants", 120, refutations},
      {10, "closed-form generating functions", 10, closed_forms},
      {11, "moments by quadrature", 60, quadrature},
      {12, "free powers and the A027307 fixture", 10, free_powers},
      {13, "region grid at e = 1", 10, region},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++ran;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.expect(false, "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << std::setw(2) << c.id << "  " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << " s]  " << std::defaultfloat << std::setprecision(6) << o.detail.str()
              << '\n';
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return failed ? 1 : 0;
}
