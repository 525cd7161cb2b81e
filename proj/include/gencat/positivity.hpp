#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gencat/moments.hpp"
#include "gencat/param_vec.hpp"
#include "gencat/roots.hpp"
#include "gencat/surd.hpp"

namespace gencat::positivity {

// ---------------------------------------------------------------------------
// Critical values: z such that P_a(w) - z has a multiple root, i.e. z = P_a(w0)
// for a root w0 of P_a'.
// ---------------------------------------------------------------------------

struct CriticalPair {
  ComplexValue w0;
  ComplexValue z0;
  double residual = 0.0;  // relative residual of P_a' at w0
};

struct CriticalValueSet {
  std::vector<CriticalPair> pairs;
  double tol = 1e-12;

  /// z-values with near-duplicates merged (|z - z'| <= merge_tol * max(1, |z|)).
  std::vector<ComplexValue> distinct_values(double merge_tol = 1e-8) const;
};

CriticalValueSet critical_values(const ParamVec& a, double tol = 1e-12);

/// Every critical value has |Im z| <= tol * max(1, |z|).
bool nset_real(const ParamVec& a, double tol = 1e-9);

/// All roots of P_a' real, certified by a Sturm sequence.
bool derivative_real_rooted(const ParamVec& a);

// ---------------------------------------------------------------------------
// r = 3: a = (a, b)
// ---------------------------------------------------------------------------

/// Positive definiteness iff a^2 + 3b >= 0.
bool criterion_r3(const Rational& a, const Rational& b);

struct CriticalPairR3 {
  Surd minus;
  Surd plus;
};

/// z_pm = (-2a^3 - 9ab +- 2 (a^2+3b)^{3/2}) / (27 b^2) in Q(sqrt(a^2+3b)).
/// On a^2 + 4b = 0 returns exactly z_- = 0, z_+ = 8/(27a). Requires b != 0.
CriticalPairR3 z_pm(const Rational& a, const Rational& b);

/// tau_pm = 1/z_pm; std::nullopt stands for an infinite value (z = 0).
struct TauPair {
  std::optional<Surd> minus;
  std::optional<Surd> plus;
};
TauPair tau_pm(const Rational& a, const Rational& b);

struct SupportBounds {
  Surd lower;
  Surd upper;
};

/// Interval containing the support of mu(a, b) when a > 0 and a^2 + 3b >= 0:
/// [0, tau_+] for b < 0 and [tau_-, tau_+] for b > 0. Negative a reflects
/// through x -> -x (dilation by -1) and is not exposed here.
SupportBounds support_bounds(const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// r = 4: a = (a, b, e)
// ---------------------------------------------------------------------------

/// a^6 + 3a^4 b + 3a^2 b^2 + 2b^3 - 2abe - e^2; negative refutes positivity.
Rational necessary_r4_value(const Rational& a, const Rational& b, const Rational& e);
bool necessary_r4(const Rational& a, const Rational& b, const Rational& e);

/// 9a^2b^2 + 27b^3 - 32a^3e - 108abe - 108e^2 (a positive multiple of the
/// discriminant of P'); >= 0 iff P' has only real roots.
Rational sufficient_r4_value(const Rational& a, const Rational& b, const Rational& e);
bool sufficient_r4(const Rational& a, const Rational& b, const Rational& e);

struct ExactNSetR4 {
  Rational first;   // (-b^4 - 32 b e^2) / (256 e^3), the value at w = -b/(4e)
  Rational second;  // e / b^2, the common value at the other two critical points
};

/// When b^3 = 4abe + 8e^2 holds exactly (b, e != 0), the critical values are
/// rational and real; otherwise std::nullopt.
std::optional<ExactNSetR4> special_r4(const Rational& a, const Rational& b, const Rational& e);

// ---------------------------------------------------------------------------
// Symmetric vectors (0, a, 0, b) and (0, a, 0, b, 0, e)
// ---------------------------------------------------------------------------

bool sufficient_r5_sym(const Rational& a, const Rational& b);

/// 225a^2b^2 + 500b^3 - 756a^3e - 1890abe - 1323e^2
Rational eq41_value(const Rational& a, const Rational& b, const Rational& e);
/// 4(25b^2 - 63ae)^3 - (945abe - 250b^3 + 1323e^2)^2, equal to 1323 e^2 * eq41_value.
Rational eq42_value(const Rational& a, const Rational& b, const Rational& e);
bool sufficient_r7_sym(const Rational& a, const Rational& b, const Rational& e);

// ---------------------------------------------------------------------------
// Hankel determinants
// ---------------------------------------------------------------------------

/// Determinant of a square rational matrix (row-major), fraction-free
/// elimination with row pivoting.
Rational determinant(std::vector<std::vector<Rational>> m);

/// H_k = det(c_{i+j})_{i,j<k} for k = 1..m. Needs at least 2m - 1 moments.
std::vector<Rational> hankel_dets(std::span<const Rational> c, std::size_t m);

// ---------------------------------------------------------------------------
// Verdict
// ---------------------------------------------------------------------------

enum class Status { PositiveDefinite, NotPositiveDefinite, Unknown };

std::string to_string(Status s);

struct IffCriterionR3 { Rational discriminant; };      // a^2 + 3b >= 0
struct R3CriterionViolated { Rational discriminant; };  // a^2 + 3b < 0
struct SturmAllRealRoots { int real_roots = 0; };
struct SpecialSubclassR4 { ExactNSetR4 nset; };
struct SymmetricR5 { Rational value; };                 // 9a^2 + 20b
struct SymmetricR7 { Rational value; };                 // eq41_value
struct NecessaryR4Violated { Rational value; };
struct HankelNegative { std::size_t order = 0; Rational determinant; };
struct NumericNsetReal { double tol = 0.0; };           // not a proof

using Certificate = std::variant<std::monostate, IffCriterionR3, R3CriterionViolated, SturmAllRealRoots,
                                 SpecialSubclassR4, SymmetricR5, SymmetricR7, NecessaryR4Violated,
                                 HankelNegative, NumericNsetReal>;

std::string certificate_name(const Certificate& c);

struct Verdict {
  Status status = Status::Unknown;
  Certificate certificate;
  bool rigorous = false;  // false only for the numeric critical-value certificate
  std::size_t hankel_depth = 0;
};

struct VerdictOptions {
  std::size_t hankel_depth = 12;
  double tol = 1e-9;
};

/// Precedence: exact r = 3 criterion; exact sufficient certificates (Sturm,
/// special r = 4 subclass, symmetric r = 5 / r = 7); exact refutations
/// (r = 4 necessary condition, negative Hankel determinant); numeric real
/// critical values (flagged non-rigorous); otherwise Unknown.
Verdict verdict(const ParamVec& a, const VerdictOptions& options = {});

// ---------------------------------------------------------------------------
// Figure-style region data for r = 4 at fixed e
// ---------------------------------------------------------------------------

struct GridPoint {
  Rational a;
  Rational b;
  bool nec32 = false;
  bool suf33 = false;
  bool special35 = false;
};

/// Exact grid a_min..a_max x b_min..b_max (inclusive, a-major) with the given step.
std::vector<GridPoint> region_grid(const Rational& e, const Rational& a_min, const Rational& a_max,
                                   const Rational& b_min, const Rational& b_max, const Rational& step);

/// CSV with header "a,b,nec32,suf33,special35", booleans as 0/1.
std::string region_grid_csv(std::span<const GridPoint> grid);

}  // namespace gencat::positivity
