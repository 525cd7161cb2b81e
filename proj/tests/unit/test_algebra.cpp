#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gen.hpp"
#include "gencat/errors.hpp"
#include "gencat/poly.hpp"
#include "gencat/roots.hpp"
#include "gencat/series.hpp"
#include "gencat/surd.hpp"

using namespace gencat;
using gencat::testing::Gen;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational literals round-trip") {
  CHECK(q("3/6").to_string() == "1/2");
  CHECK(q("-4/2").to_string() == "-2");
  CHECK(q("+7").to_string() == "7");
  CHECK(q("0/5").is_zero());
  CHECK(q("-1/3") < q("0"));
  CHECK_THROWS_AS(q("0.5"), ParseError);
  CHECK_THROWS_AS(q("1e3"), ParseError);
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
  CHECK_THROWS_AS(q("1/-2"), ParseError);

  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = g.rational(1000, 1000);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(q("2/3").pow(-2) == q("9/4"));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(q("1") / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(q("1/2"), 2) == q("-1/8"));
  CHECK(factorial(10) == 3628800);

  Rational root;
  CHECK(is_rational_square(q("9/4"), &root));
  CHECK(root == q("3/2"));
  CHECK_FALSE(is_rational_square(q("2")));
  CHECK_FALSE(is_rational_square(q("-4")));
}

TEST_CASE("poly basics") {
  const Poly p{0, 1, -2};  // w - 2w^2
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "w - 2*w^2");
  CHECK(p(q("1/4")) == q("1/8"));
  CHECK(p.derivative() == Poly{1, -4});
  CHECK(Poly().degree() == -1);
  CHECK(Poly{1, 0, 0} == Poly{1});
  CHECK_THROWS(Poly().leading());

  const Poly a{-1, 0, 1};  // w^2 - 1
  const Poly b{1, 1};
  const auto [quo, rem] = divmod(a, b);
  CHECK(quo == Poly{-1, 1});
  CHECK(rem.is_zero());
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
}

TEST_CASE("poly composition agrees with pointwise evaluation") {
  Gen g(12);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c1, c2;
    for (int k = 0; k < 4; ++k) c1.push_back(g.rational());
    for (int k = 0; k < 3; ++k) c2.push_back(g.rational());
    const Poly outer(c1), inner(c2);
    const Poly comp = outer.compose(inner);
    for (int t = 0; t < 5; ++t) {
      const Rational x = g.rational();
      CHECK(comp(x) == outer(inner(x)));
    }
  }
}

TEST_CASE("divmod reconstructs the dividend") {
  Gen g(13);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> ca, cb;
    for (int k = 0; k < 6; ++k) ca.push_back(g.rational());
    for (int k = 0; k < 3; ++k) cb.push_back(g.rational());
    cb.push_back(g.nonzero_rational());
    const Poly a(ca), b(cb);
    const auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("series reciprocal and reversion") {
  // 1/(1 - z) = sum z^n
  const TruncatedSeries s(std::vector<Rational>{1, -1});
  const auto inv = TruncatedSeries::from_poly(Poly{1, -1}, 6).reciprocal();
  for (std::size_t k = 0; k <= 6; ++k) CHECK(inv[k] == Rational(1));
  CHECK(s.order() == 1);

  // Reversion of z - z^2 gives z * Catalan(z).
  const auto w = series_reversion(TruncatedSeries::from_poly(Poly{0, 1, -1}, 8));
  const std::vector<Rational> expect{0, 1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t k = 0; k <= 8; ++k) CHECK(w[k] == expect[k]);

  CHECK_THROWS_AS(series_reversion(TruncatedSeries::from_poly(Poly{1, 1}, 4)), DomainError);
  CHECK_THROWS_AS(series_reversion(TruncatedSeries::from_poly(Poly{0, 0, 1}, 4)), DomainError);
}

TEST_CASE("reversion is a two-sided inverse") {
  Gen g(14);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> c{0, g.nonzero_rational()};
    for (int k = 0; k < 4; ++k) c.push_back(g.rational());
    const auto s = TruncatedSeries::from_poly(Poly(c), 10);
    const auto w = series_reversion(s);
    const auto id = TruncatedSeries::from_poly(Poly::identity(), 10);
    CHECK(s.compose(w) == id);
    CHECK(w.compose(s) == id);
  }
}

TEST_CASE("sturm counts distinct real roots") {
  CHECK(sturm_real_root_count(Poly{-1, 0, 1}).real_roots == 2);  // w^2 - 1
  CHECK(sturm_real_root_count(Poly{1, 0, 1}).real_roots == 0);   // w^2 + 1
  const auto dbl = sturm_real_root_count(Poly{1, -2, 1});        // (w - 1)^2
  CHECK(dbl.real_roots == 1);
  CHECK(dbl.all_real());
  // (w - 1)(4w^2 + w - 1)
  CHECK(sturm_real_root_count(Poly{1, -3, -3, 4}).real_roots == 3);
  // 1 - 4w + 6w^2 - 4w^3, roots 1/2 and 1/2 +- i/2
  const auto c = sturm_real_root_count(Poly{1, -4, 6, -4});
  CHECK(c.real_roots == 1);
  CHECK(c.distinct_roots == 3);
  CHECK_FALSE(c.all_real());
  CHECK_THROWS_AS(sturm_real_root_count(Poly()), DomainError);
}

TEST_CASE("sturm agrees with products of known linear factors") {
  Gen g(15);
  for (int i = 0; i < 40; ++i) {
    Poly p = Poly::constant(g.nonzero_rational());
    int real = 0;
    std::vector<Rational> seen;
    for (int k = 0; k < 3; ++k) {
      const Rational r = g.rational();
      p = p * Poly{-r, 1};
      if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
        seen.push_back(r);
        ++real;
      }
    }
    if (g.coin()) p = p * Poly{g.integer(1, 5), 0, 1};  // no real roots
    CHECK(sturm_real_root_count(p).real_roots == real);
  }
}

TEST_CASE("aberth roots") {
  const auto r = roots_complex(Poly{1, -4, 6, -4});
  REQUIRE(r.size() == 3);
  for (const ComplexValue want : {ComplexValue(0.5, -0.5), ComplexValue(0.5, 0.0), ComplexValue(0.5, 0.5)}) {
    const bool found = std::any_of(r.begin(), r.end(), [&](const ComplexValue& z) { return std::abs(z - want) < 1e-12; });
    CHECK(found);
  }

  const auto lin = roots_complex(Poly{1, -2});
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == ComplexValue(0.5, 0.0));
  CHECK_THROWS_AS(roots_complex(Poly{3}), DomainError);
}

TEST_CASE("aberth residuals on random polynomials") {
  Gen g(16);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(g.integer(2, 8));
    for (int k = 0; k < deg; ++k) c.push_back(g.rational());
    c.push_back(g.nonzero_rational());
    const Poly p(c);
    const auto roots = roots_complex(p);
    CHECK(roots.size() == static_cast<std::size_t>(p.degree()));
    for (const auto& z : roots) CHECK(relative_residual(p, z) <= 1e-12);
  }
}

TEST_CASE("surd arithmetic in Q(sqrt d)") {
  const Surd r2 = Surd::sqrt_of(Rational(2));
  CHECK(r2 * r2 == Surd(Rational(2)));
  CHECK((Surd(Rational(1)) + r2).norm() == Rational(-1));
  CHECK((Surd(Rational(1)) + r2).inverse() == Surd(Rational(-1)) + r2);
  CHECK(Surd::sqrt_of(q("9/4")) == Surd(q("3/2")));
  CHECK(Surd(Rational(3), Rational(-2), Rational(2)).sign() == 1);   // 3 - 2 sqrt 2 > 0
  CHECK(Surd(Rational(1), Rational(-1), Rational(2)).sign() == -1);  // 1 - sqrt 2 < 0
  CHECK_THROWS_AS(Surd::sqrt_of(Rational(-1)).sign(), DomainError);
  CHECK_THROWS_AS(Surd::sqrt_of(Rational(2)) + Surd::sqrt_of(Rational(3)), DomainError);
  CHECK(std::abs(r2.to_double() - std::sqrt(2.0)) < 1e-15);
  const auto i = Surd::sqrt_of(Rational(-1)).to_complex();
  CHECK(i == ComplexValue(0.0, 1.0));
}

}  // TEST_SUITE
