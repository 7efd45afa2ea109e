// Command-line front end: constant / transform / sweep / verify.
//
// Exit codes: 0 success, 2 validation error (one-line diagnostic),
// 3 numerical failure, 64 usage error.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radonw/constants.hpp"
#include "radonw/errors.hpp"
#include "radonw/exponents.hpp"
#include "radonw/norms.hpp"
#include "radonw/profiles.hpp"
#include "radonw/specfun.hpp"
#include "radonw/transforms.hpp"
#include "radonw/verify.hpp"

using nlohmann::json;
using namespace radonw;

namespace {

constexpr const char* kSeedEnv = "RADONW_SEED";

double parse_p(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "inf" || s == "infinity") return kInfExponent;
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw DomainError("cannot parse --p value '" + s + "'");
  return v;
}

json p_to_json(double p) {
  if (std::isinf(p)) return json("inf");
  return json(p);
}

std::uint64_t default_seed() {
  if (const char* e = std::getenv(kSeedEnv)) {
    return std::stoull(std::string(e));
  }
  return QuadratureSpec{}.seed;
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    if (doc.empty() || doc.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw DomainError("cannot open output file " + out_path);
  os << doc;
  if (doc.empty() || doc.back() != '\n') os << '\n';
}

struct Cmd {
  std::string kind_name;
  int n = 2;
  int k = 0;  // 0 = default to n-1
  std::string p_str = "2";
  double alpha = 0.0;
  double mu = 0.0;
  bool want_oracle = false;
  bool as_json = false;
  std::string profile_spec;
  std::vector<double> t_list;
  double eps_start = 0.1;
  double eps_factor = 0.5;
  int eps_steps = 8;
  std::string suite = "all";
  std::string out_path;
  std::uint64_t seed = default_seed();
  double rel_tol = 0.0;
};

QuadratureSpec make_spec(const Cmd& c) {
  QuadratureSpec spec;
  spec.seed = c.seed;
  if (c.rel_tol > 0.0) spec.rel_tol = c.rel_tol;
  return spec;
}

int effective_k(const Cmd& c, Kind kind) {
  if (c.k > 0) return c.k;
  if (kind_hyperplane(kind)) return c.n - 1;
  throw DomainError("--k is required for the k-plane kinds");
}

int run_constant(const Cmd& c) {
  const Kind kind = parse_kind(c.kind_name);
  const double p = parse_p(c.p_str);
  const ExponentConfig cfg =
      validate(c.n, effective_k(c, kind), p, c.alpha, c.mu, kind);
  constants::ConstantReport r =
      c.want_oracle ? constants::sharp_constant_with_oracle(cfg, make_spec(c))
                    : constants::sharp_constant(cfg);
  json doc{{"command", "constant"},
           {"kind", kind_name(cfg.kind)},
           {"n", cfg.n},
           {"k", cfg.k},
           {"p", p_to_json(cfg.p)},
           {"alpha", cfg.alpha},
           {"mu", cfg.mu},
           {"nu", cfg.nu},
           {"lambda", r.lambda},
           {"value", r.value},
           {"factor_c1", r.factor_c1},
           {"factor_c2", r.factor_c2}};
  if (r.has_oracle) {
    doc["oracle"] = json{{"value", r.oracle_value}, {"error", r.oracle_error}};
    if (std::fabs(r.oracle_value - r.value) >
        1e-6 * std::fabs(r.value) + 10.0 * r.oracle_error)
      throw ConvergenceError("oracle disagrees with the closed form",
                             std::fabs(r.oracle_value - r.value));
  }
  emit(doc.dump(2), c.out_path);
  return 0;
}

int run_transform(const Cmd& c) {
  const Kind kind = parse_kind(c.kind_name);
  const int k = effective_k(c, kind);
  if (kind_fractional(kind) != (c.alpha > 0.0) && c.alpha != 0.0)
    throw DomainError("alpha must be 0 for the plain kinds");
  const RadialProfile f = parse_profile(c.profile_spec);
  if (c.t_list.empty()) throw DomainError("--t requires at least one offset");
  const QuadratureSpec spec = make_spec(c);
  std::vector<double> values;
  values.reserve(c.t_list.size());
  for (double t : c.t_list) {
    if (t < 0.0) throw DomainError("offsets must be nonnegative");
    values.push_back(kind_fractional(kind)
                         ? transforms::k_semyanistyi_radial(f, c.n, k, t,
                                                            c.alpha, spec)
                         : transforms::kplane_radial(f, c.n, k, t, spec));
  }
  json doc{{"command", "transform"}, {"kind", kind_name(kind)},
           {"n", c.n},              {"k", k},
           {"alpha", c.alpha},      {"profile", c.profile_spec},
           {"t", c.t_list},         {"values", values}};
  emit(doc.dump(2), c.out_path);
  return 0;
}

int run_sweep(const Cmd& c) {
  const Kind kind = parse_kind(c.kind_name);
  const double p = parse_p(c.p_str);
  const ExponentConfig cfg =
      validate(c.n, effective_k(c, kind), p, c.alpha, c.mu, kind);
  if (c.eps_steps < 1 || !(c.eps_start > 0.0) || !(c.eps_factor > 0.0) ||
      !(c.eps_factor < 1.0))
    throw DomainError("epsilon schedule must be positive and decreasing");
  std::vector<double> eps;
  for (int j = 0; j < c.eps_steps; ++j)
    eps.push_back(c.eps_start * std::pow(c.eps_factor, j));
  const verify::SweepResult res =
      verify::sharpness_sweep(cfg, eps, make_spec(c));
  if (c.as_json) {
    json doc{{"command", "sweep"},
             {"kind", kind_name(cfg.kind)},
             {"n", cfg.n},
             {"k", cfg.k},
             {"p", p_to_json(cfg.p)},
             {"alpha", cfg.alpha},
             {"mu", cfg.mu},
             {"target", res.target},
             {"extrapolated", res.extrapolated},
             {"epsilons", res.epsilons},
             {"ratios", res.ratios},
             {"gaps", res.gaps}};
    emit(doc.dump(2), c.out_path);
  } else {
    emit(res.to_csv(), c.out_path);
  }
  return 0;
}

struct SuiteReport {
  std::ostringstream lines;
  int failures = 0;
  void check(const std::string& name, bool ok) {
    lines << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

void suite_constants(SuiteReport& rep) {
  bool identity_ok = true;
  for (int n : {2, 3, 4}) {
    for (double p : {1.5, 2.0, 4.0}) {
      const auto w = mu_window(n, n - 1, p, 0.5, Kind::HyperplaneFractional);
      const double mu = 0.5 * (w.first + w.second);
      const auto h = constants::sharp_constant(
          validate(n, n - 1, p, 0.5, mu, Kind::HyperplaneFractional));
      const auto kp = constants::sharp_constant(
          validate(n, n - 1, p, 0.5, mu, Kind::KPlaneFractional));
      const double lhs =
          kp.value * std::pow(specfun::sphere_area(n - 1), 1.0 / p);
      identity_ok = identity_ok && std::fabs(lhs - h.value) < 1e-12 * h.value;
    }
  }
  rep.check("constants/gamma-identity", identity_ok);

  const auto frac = constants::sharp_constant(
      validate(2, 1, 2.0, 1e-8, 0.75, Kind::HyperplaneFractional));
  const auto plain = constants::sharp_constant(
      validate(2, 1, 2.0, 0.0, 0.75, Kind::HyperplaneRadon));
  rep.check("constants/alpha-to-zero",
            std::fabs(frac.value - plain.value) < 1e-6 * plain.value);

  const auto with_oracle = constants::sharp_constant_with_oracle(
      validate(2, 1, 2.0, 0.5, 0.75, Kind::HyperplaneFractional));
  rep.check("constants/oracle",
            std::fabs(with_oracle.oracle_value - with_oracle.value) <
                1e-6 * with_oracle.value);
}

void suite_transforms(SuiteReport& rep) {
  const RadialProfile g = gaussian_profile();
  bool radon_ok = true;
  for (double t : {0.0, 0.5, 1.0}) {
    const double got = transforms::radon_radial(g, 2, t);
    const double want = std::sqrt(M_PI) * std::exp(-t * t);
    radon_ok = radon_ok && std::fabs(got - want) < 1e-8 * want;
  }
  rep.check("transforms/gaussian-radon", radon_ok);

  bool kplane_ok = true;
  for (int k : {1, 2}) {
    const double got = transforms::kplane_radial(g, 3, k, 0.5);
    const double want = std::pow(M_PI, 0.5 * k) * std::exp(-0.25);
    kplane_ok = kplane_ok && std::fabs(got - want) < 1e-8 * want;
  }
  rep.check("transforms/gaussian-kplane", kplane_ok);

  bool limit_ok = true;
  const auto res = verify::limit_check_alpha0(g, 2, {1e-1, 1e-2}, {0.0, 1.0});
  limit_ok = res.size() == 2 && res[1] < res[0] && res[1] < 0.1;
  rep.check("transforms/alpha-limit", limit_ok);
}

void suite_sharpness(SuiteReport& rep) {
  std::vector<double> eps;
  for (int j = 0; j < 5; ++j) eps.push_back(0.1 * std::pow(0.5, j));
  try {
    const auto frac = verify::sharpness_sweep(
        validate(2, 1, 2.0, 0.5, 0.75, Kind::HyperplaneFractional), eps);
    rep.check("sharpness/semyanistyi",
              frac.gaps.back() < frac.gaps.front() &&
                  std::fabs(frac.extrapolated - frac.target) <
                      0.01 * frac.target);
    const auto plain = verify::sharpness_sweep(
        validate(2, 1, 2.0, 0.0, 1.0, Kind::HyperplaneRadon), eps);
    rep.check("sharpness/radon",
              plain.gaps.back() < plain.gaps.front() &&
                  std::fabs(plain.extrapolated - plain.target) <
                      0.01 * plain.target);
  } catch (const SharpnessError& e) {
    rep.lines << "FAIL sharpness (" << e.what() << ")\n";
    ++rep.failures;
  }
}

int run_verify(const Cmd& c) {
  SuiteReport rep;
  const bool all = c.suite == "all";
  if (all || c.suite == "constants") suite_constants(rep);
  if (all || c.suite == "transforms") suite_transforms(rep);
  if (all || c.suite == "sharpness") suite_sharpness(rep);
  emit(rep.lines.str(), c.out_path);
  return rep.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-norm constants for Radon and k-plane transforms"};
  app.require_subcommand(1);
  Cmd c;

  auto add_tuple = [&](CLI::App* sub, bool with_p_mu) {
    sub->add_option("--kind", c.kind_name,
                    "semyanistyi | radon | ksemyanistyi | kplane")
        ->required();
    sub->add_option("--n", c.n, "ambient dimension")->required();
    sub->add_option("--k", c.k, "plane dimension (default n-1)");
    sub->add_option("--alpha", c.alpha, "fractional order");
    if (with_p_mu) {
      sub->add_option("--p", c.p_str, "Lebesgue exponent, 'inf' allowed")
          ->required();
      sub->add_option("--mu", c.mu, "source weight power")->required();
    }
    sub->add_option("--out", c.out_path, "write the document to a file");
    sub->add_option("--seed", c.seed, "RNG seed (env " + std::string(kSeedEnv) +
                                          " sets the default)");
    sub->add_option("--rel-tol", c.rel_tol, "quadrature relative tolerance");
  };

  CLI::App* constant = app.add_subcommand("constant", "sharp constant");
  add_tuple(constant, true);
  constant->add_flag("--oracle", c.want_oracle,
                     "also run the quadrature oracle");
  constant->add_flag("--json", c.as_json, "JSON output (the default)");

  CLI::App* transform = app.add_subcommand("transform", "radial transform");
  add_tuple(transform, false);
  transform->add_option("--profile", c.profile_spec,
                        "gauss | exp | ball | power:a[,cutoff]")
      ->required();
  transform->add_option("--t", c.t_list, "offset radii")
      ->required()
      ->delimiter(',');
  transform->add_flag("--json", c.as_json, "JSON output (the default)");

  CLI::App* sweep = app.add_subcommand("sweep", "sharpness sweep");
  add_tuple(sweep, true);
  sweep->add_option("--eps-start", c.eps_start, "first epsilon");
  sweep->add_option("--eps-factor", c.eps_factor, "geometric factor");
  sweep->add_option("--eps-steps", c.eps_steps, "number of sweep points");
  sweep->add_flag("--json", c.as_json, "JSON instead of CSV");

  CLI::App* verify_cmd = app.add_subcommand("verify", "built-in check suites");
  verify_cmd->add_option("--suite", c.suite,
                         "all | constants | transforms | sharpness")
      ->check(CLI::IsMember({"all", "constants", "transforms", "sharpness"}));
  verify_cmd->add_option("--out", c.out_path, "write the report to a file");
  verify_cmd->add_option("--seed", c.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << std::flush;
    return 64;
  }

  try {
    if (constant->parsed()) return run_constant(c);
    if (transform->parsed()) return run_transform(c);
    if (sweep->parsed()) return run_sweep(c);
    return run_verify(c);
  } catch (const AdmissibilityError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrabilityError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
