#include "radonw/profiles.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace radonw {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

RadialProfile gaussian_profile() {
  RadialProfile f;
  f.eval = [](double r) { return std::exp(-r * r); };
  f.a0 = 0.0;
  f.a_inf = 1e6;  // decays faster than any power; envelope constant below
  f.c0 = 1.0;
  f.c_inf = 1.0;
  f.label = "gauss";
  // exp(-r^2) <= r^{-a} for r >= sqrt(a) roughly; encode a practical cap:
  // exp(-r^2) < 1e-320 for r > 27.2, so a hard support cutoff is safe.
  f.support_max = 30.0;
  return f;
}

RadialProfile exp_profile() {
  RadialProfile f;
  f.eval = [](double r) { return std::exp(-r); };
  f.a0 = 0.0;
  f.a_inf = 1e6;
  f.c0 = 1.0;
  f.c_inf = 1.0;
  f.label = "exp";
  f.support_max = 745.0;  // exp(-r) underflows past here
  return f;
}

RadialProfile ball_profile() {
  RadialProfile f;
  f.eval = [](double) { return 1.0; };
  f.a0 = 0.0;
  f.a_inf = 0.0;
  f.support_max = 1.0;
  f.label = "ball";
  return f;
}

RadialProfile power_profile(double a, double cutoff) {
  if (!(cutoff > 0.0)) throw DomainError("power_profile: cutoff must be positive");
  RadialProfile f;
  f.eval = [a](double r) { return std::pow(r, -a); };
  f.log_eval = [a](double u) { return -a * u; };
  f.a0 = a;
  f.a_inf = a;
  f.c0 = 1.0;
  f.c_inf = 1.0;
  f.support_min = cutoff;
  std::ostringstream os;
  os << "power:" << a;
  if (cutoff != 1.0) os << "," << cutoff;
  f.label = os.str();
  return f;
}

RadialProfile zero_profile() {
  RadialProfile f;
  f.eval = [](double) { return 0.0; };
  f.support_max = 0.0;
  f.label = "zero";
  return f;
}

RadialProfile parse_profile(const std::string& spec) {
  if (spec == "gauss" || spec == "gaussian") return gaussian_profile();
  if (spec == "exp") return exp_profile();
  if (spec == "ball") return ball_profile();
  if (spec.rfind("power:", 0) == 0) {
    const auto parts = split(spec.substr(6), ',');
    if (parts.empty() || parts.size() > 2)
      throw DomainError("parse_profile: expected power:a[,cutoff]");
    try {
      const double a = std::stod(parts[0]);
      const double cutoff = parts.size() == 2 ? std::stod(parts[1]) : 1.0;
      return power_profile(a, cutoff);
    } catch (const std::logic_error&) {
      throw DomainError("parse_profile: bad numeric field in '" + spec + "'");
    }
  }
  throw DomainError("parse_profile: unknown profile '" + spec +
                    "' (expected gauss|exp|ball|power:a[,cutoff])");
}

RadialProfile dilate(const RadialProfile& f, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dilate: lambda must be positive");
  RadialProfile g = f;
  auto base = f.eval;
  g.eval = [base, lambda](double r) { return base(lambda * r); };
  if (f.log_eval) {
    auto lbase = f.log_eval;
    const double shift = std::log(lambda);
    g.log_eval = [lbase, shift](double u) { return lbase(u + shift); };
  }
  // |f(lambda r)| <= c (lambda r)^{-a} = c lambda^{-a} r^{-a}
  g.c0 = f.c0 * std::pow(lambda, -f.a0);
  g.c_inf = f.c_inf * std::pow(lambda, -f.a_inf);
  g.support_min = f.support_min / lambda;
  g.support_max = f.support_max / lambda;
  std::ostringstream os;
  os << f.label << "@" << lambda;
  g.label = os.str();
  return g;
}

}  // namespace radonw
