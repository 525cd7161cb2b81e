#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencat/analytic.hpp"
#include "gencat/convolution.hpp"
#include "gencat/families.hpp"
#include "gencat/moments.hpp"
#include "gencat/oeis.hpp"
#include "gencat/oracle.hpp"
#include "gencat/positivity.hpp"

namespace gencat::cli {

namespace {

using json = nlohmann::ordered_json;

json strings(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// Thrown by a subcommand that ran but found two routes disagreeing; the
// report has already been written.
struct Disagreement {};

json certificate_json(const positivity::Certificate& c) {
  using namespace positivity;
  json j;
  j["kind"] = certificate_name(c);
  std::visit(
      [&j](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, IffCriterionR3> || std::is_same_v<T, R3CriterionViolated>) {
          j["a2_plus_3b"] = cert.discriminant.to_string();
        } else if constexpr (std::is_same_v<T, SturmAllRealRoots>) {
          j["real_roots"] = cert.real_roots;
        } else if constexpr (std::is_same_v<T, SpecialSubclassR4>) {
          j["nset"] = json::array({cert.nset.first.to_string(), cert.nset.second.to_string()});
        } else if constexpr (std::is_same_v<T, SymmetricR5> || std::is_same_v<T, SymmetricR7> ||
                             std::is_same_v<T, NecessaryR4Violated>) {
          j["value"] = cert.value.to_string();
        } else if constexpr (std::is_same_v<T, HankelNegative>) {
          j["order"] = cert.order;
          j["determinant"] = cert.determinant.to_string();
        } else if constexpr (std::is_same_v<T, NumericNsetReal>) {
          j["tol"] = cert.tol;
        }
      },
      c);
  return j;
}

// Exact moments for the density-check verb.
std::optional<Rational> exact_density_moment(const analytic::DensitySpec& spec, unsigned n) {
  using analytic::DensityKind;
  const Rational one(1);
  switch (spec.kind) {
    case DensityKind::Catalan:
      return moments_recurrence(ParamVec({one}), n)[n];
    case DensityKind::MarchenkoPastur:
      return free_power_moments(ParamVec({one}), spec.param, n)[n];
    case DensityKind::W31:
      return fuss_raney(Rational(3), one, static_cast<long>(n));
    case DensityKind::W31SymmetricAerated:
      return moments_recurrence(ParamVec({Rational(0), one}), n)[n];
    case DensityKind::R3Third:
      return moments_r3(spec.param, -spec.param * spec.param / Rational(3), n)[n];
    case DensityKind::Patalan:
      return patalan_moments(spec.param, n)[n];
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Catalan sequences: moments, cumulants, convolutions and positivity", "gencat"};
  app.set_config("--config", "", "TOML-style file of option values (command line wins)");
  app.require_subcommand(1);

  std::string params, left, right, method = "recurrence", route = "reversion", t_text, density, id;
  std::size_t n = 10, depth = 12;
  double tol_verdict = 1e-9, tol_nset = 1e-12, reltol = 1e-8;
  bool no_crosscheck = false, offline = false, use_fixture = false;
  std::string cache_dir = ".oeis-cache", base_url = "https://oeis.org";
  int timeout = 20;
  std::string e_text, a_min = "-10", a_max = "10", b_min = "-20", b_max = "8", step = "1/2";

  auto params_opt = [&](CLI::App* s) { s->add_option("--params", params, "a_2,...,a_r as integers or p/q")->required(); };
  auto n_opt = [&](CLI::App* s) { s->add_option("--n", n, "largest index")->capture_default_str(); };

  auto* gen = app.add_subcommand("gen", "moments c_0..c_N");
  params_opt(gen);
  n_opt(gen);
  gen->add_option("--method", method)->check(CLI::IsMember({"recurrence", "reversion", "closed-r3"}))->capture_default_str();
  gen->add_flag("--no-crosscheck", no_crosscheck, "skip the reversion cross-check (N <= 12)");

  auto* cum = app.add_subcommand("cumulants", "free cumulants kappa_1..kappa_N");
  params_opt(cum);
  n_opt(cum);

  auto* fp = app.add_subcommand("freepow", "moments of the free convolution power t");
  params_opt(fp);
  n_opt(fp);
  fp->add_option("--t", t_text, "t > 0")->required();
  fp->add_option("--route", route)->check(CLI::IsMember({"reversion", "cumulants"}))->capture_default_str();

  auto* mc = app.add_subcommand("monoconv", "monotonic convolution left |> right");
  mc->add_option("--left", left)->required();
  mc->add_option("--right", right)->required();

  auto* ver = app.add_subcommand("verdict", "positive definiteness with a certificate");
  params_opt(ver);
  ver->add_option("--hankel-depth", depth)->capture_default_str();
  ver->add_option("--tol", tol_verdict)->capture_default_str();

  auto* ns = app.add_subcommand("nset", "critical values of P_a");
  params_opt(ns);
  ns->add_option("--tol", tol_nset)->capture_default_str();

  auto* hk = app.add_subcommand("hankel", "exact Hankel determinants H_1..H_m");
  params_opt(hk);
  hk->add_option("--depth", depth)->capture_default_str();

  auto* oc = app.add_subcommand("oracle-check", "engine against tree and path enumeration");
  params_opt(oc);
  n_opt(oc);

  auto* dc = app.add_subcommand("density-check", "moment by quadrature against the exact value");
  dc->add_option("--spec", density, "catalan | mp:<t> | w31 | w31-sym | r3third:<a> | patalan:<p>")->required();
  n_opt(dc);
  dc->add_option("--reltol", reltol)->capture_default_str();

  auto* oe = app.add_subcommand("oeis-check", "engine moments against an OEIS b-file");
  params_opt(oe);
  n_opt(oe);
  oe->add_option("--id", id, "A-number or embedded fixture id")->required();
  oe->add_flag("--offline", offline, "never touch the network")->envname("OEIS_OFFLINE");
  oe->add_option("--cache-dir", cache_dir)->envname("OEIS_CACHE_DIR")->capture_default_str();
  oe->add_option("--timeout", timeout, "seconds")->capture_default_str();
  oe->add_option("--base-url", base_url)->capture_default_str();
  oe->add_flag("--fixture", use_fixture, "compare against the embedded fixture instead");

  auto* rg = app.add_subcommand("region-grid", "r = 4 conditions over an (a, b) grid, as CSV");
  rg->add_option("--e", e_text)->required();
  rg->add_option("--a-min", a_min)->capture_default_str();
  rg->add_option("--a-max", a_max)->capture_default_str();
  rg->add_option("--b-min", b_min)->capture_default_str();
  rg->add_option("--b-max", b_max)->capture_default_str();
  rg->add_option("--step", step)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      MomentTable m;
      if (method == "closed-r3") {
        if (a.r() > 3) throw DomainError("closed-r3 needs r <= 3");
        m = moments_r3(a.a(2), a.a(3), n);
      } else if (method == "reversion") {
        m = moments_via_reversion(a, n);
      } else {
        m = moments_recurrence(a, n);
        if (!no_crosscheck && n <= 12 && moments_via_reversion(a, n).terms != m.terms)
          throw NumericFailure("recurrence and reversion disagree");
      }
      out << strings(m.terms).dump() << '\n';
    } else if (cum->parsed()) {
      out << strings(cumulants(ParamVec::parse(params), n).terms).dump() << '\n';
    } else if (fp->parsed()) {
      const auto r = route == "cumulants" ? FreePowerRoute::Cumulants : FreePowerRoute::Reversion;
      out << strings(free_power_moments(ParamVec::parse(params), Rational::parse(t_text), n, r).terms).dump() << '\n';
    } else if (mc->parsed()) {
      const ParamVec c = mono_conv(ParamVec::parse(left), ParamVec::parse(right));
      out << strings(c.coeffs()).dump() << '\n';
    } else if (ver->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      const auto v = positivity::verdict(a, {depth, tol_verdict});
      json j;
      j["params"] = strings(a.coeffs());
      j["status"] = positivity::to_string(v.status);
      j["certificate"] = certificate_json(v.certificate);
      j["rigorous"] = v.rigorous;
      j["hankel_depth"] = v.hankel_depth;
      out << j.dump(2) << '\n';
    } else if (ns->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      const auto set = positivity::critical_values(a, tol_nset);
      json j;
      j["params"] = strings(a.coeffs());
      j["pairs"] = json::array();
      for (const auto& p : set.pairs)
        j["pairs"].push_back({{"w", complex_pair(p.w0)}, {"z", complex_pair(p.z0)}, {"residual", p.residual}});
      j["distinct"] = json::array();
      for (const auto& z : set.distinct_values()) j["distinct"].push_back(complex_pair(z));
      j["real"] = positivity::nset_real(a);
      out << j.dump(2) << '\n';
    } else if (hk->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      if (depth < 1) throw DomainError("--depth must be >= 1");
      const MomentTable c = moments_recurrence(a, 2 * depth - 2);
      out << strings(positivity::hankel_dets(c.terms, depth)).dump() << '\n';
    } else if (oc->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      const Rational engine = moments_recurrence(a, n)[n];
      const Rational trees = oracle::weighted_tree_sum(a, static_cast<long>(n));
      json j;
      j["n"] = n;
      j["engine"] = engine.to_string();
      j["tree_sum"] = trees.to_string();
      bool agree = engine == trees;
      const bool integral = std::all_of(a.coeffs().begin(), a.coeffs().end(),
                                        [](const Rational& x) { return x.is_integer() && x.sign() >= 0; });
      if (integral && n <= static_cast<std::size_t>(oracle::kPathCountMaxN)) {
        const BigInt paths = oracle::labeled_path_count(a, static_cast<long>(n));
        j["path_count"] = paths.get_str();
        agree = agree && Rational(paths) == engine;
      } else {
        j["path_count"] = nullptr;
      }
      j["agree"] = agree;
      out << j.dump(2) << '\n';
      if (!agree) throw Disagreement{};
    } else if (dc->parsed()) {
      const auto spec = analytic::DensitySpec::parse(density);
      const auto q = analytic::moment_by_quadrature(spec, static_cast<unsigned>(n), reltol / 10);
      const auto exact = exact_density_moment(spec, static_cast<unsigned>(n));
      json j;
      j["spec"] = spec.to_string();
      j["n"] = n;
      j["quadrature"] = q.value;
      j["error_estimate"] = q.error_estimate;
      j["evaluations"] = q.evaluations;
      bool ok = true;
      if (exact) {
        const double x = exact->to_double();
        const double diff = std::abs(q.value - x);
        j["exact"] = exact->to_string();
        j["abs_error"] = diff;
        ok = diff <= reltol * std::max(1.0, std::abs(x));
      }
      j["ok"] = ok;
      out << j.dump(2) << '\n';
      if (!ok) throw Disagreement{};
    } else if (oe->parsed()) {
      const ParamVec a = ParamVec::parse(params);
      oeis::SequenceFixture f;
      if (use_fixture) {
        f = oeis::load_fixture(id);
      } else {
        oeis::FetchConfig cfg;
        cfg.cache_dir = cache_dir;
        cfg.offline = offline;
        cfg.timeout = std::chrono::seconds(timeout);
        cfg.base_url = base_url;
        f = oeis::fetch_oeis(id, cfg);
      }
      const MomentTable m = moments_recurrence(a, n);
      const auto rep = oeis::compare(m.terms, f);
      json j;
      j["id"] = f.id;
      j["provenance"] = oeis::to_string(f.provenance);
      j["match"] = rep.match;
      j["shift"] = rep.shift;
      j["overlap"] = rep.overlap;
      j["first_mismatch"] = rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr);
      out << j.dump(2) << '\n';
      if (!rep.match) throw Disagreement{};
    } else if (rg->parsed()) {
      const auto grid = positivity::region_grid(Rational::parse(e_text), Rational::parse(a_min), Rational::parse(a_max),
                                                Rational::parse(b_min), Rational::parse(b_max), Rational::parse(step));
      out << positivity::region_grid_csv(grid);
    }
  } catch (const Disagreement&) {
    return kNumeric;
  } catch (const oeis::BFileParseError& e) {
    err << "error: malformed b-file: " << e.what() << '\n';
    return kNetwork;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const oeis::NetworkError& e) {
    err << "error: " << e.what() << '\n';
    return kNetwork;
  }
  return kOk;
}

}  // namespace gencat::cli
